// Command-line front end: exact computation in the group F of dyadic PL
// homeomorphisms (word problem, normal forms, representation), splitting
// of conjugate-idempotent endomorphisms of free groups, and relative
// fundamental groups of finite graphs.
//
// Exit status: 0 verified/true/success, 1 falsified/not found, 2 usage or
// input error, 3 I/O failure. Reports end with `RESULT: <ok|fail|none>`.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "idemsplit/endo.hpp"
#include "idemsplit/graph_pi1.hpp"
#include "idemsplit/sampling.hpp"
#include "idemsplit/textio.hpp"
#include "idemsplit/thompson.hpp"
#include "idemsplit/verify.hpp"
#include "idemsplit/word.hpp"

namespace {

using namespace idemsplit;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read file: " + path);
  return buf.str();
}

int finish(bool ok) {
  std::cout << (ok ? "RESULT: ok" : "RESULT: fail") << "\n";
  return ok ? 0 : 1;
}

int finish_none() {
  std::cout << "RESULT: none" << "\n";
  return 1;
}

ConjIdemWitness witness_from_file(const std::string& path) {
  EndoSpec spec = parse_endo_spec(read_file(path));
  Word x0 = spec.x0.value_or(Word());
  return ConjIdemWitness(spec.endo, x0);
}

void print_split(const SplitResult& res) {
  std::cout << "n = " << res.power << "\n";
  std::cout << "y = " << render_word(res.conjugator, 'x') << "\n";
  std::cout << "g:\n" << render_endo(res.idempotent);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact word arithmetic, idempotent splitting and graph pi1"};
  app.require_subcommand(1);
  std::function<int()> task;

  // --- words in F -----------------------------------------------------
  {
    auto* cmd = app.add_subcommand("nf", "normal form of a word in F");
    auto word = std::make_shared<std::string>();
    cmd->add_option("word", *word, "word over a-letters")->required();
    cmd->callback([word, &task] {
      task = [word] {
        FWord w{parse_word(*word, 'a')};
        std::cout << render_word(normal_form(w).word, 'a') << "\n";
        return finish(true);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("eq", "are two words equal in F?");
    auto u = std::make_shared<std::string>();
    auto v = std::make_shared<std::string>();
    cmd->add_option("u", *u, "first word")->required();
    cmd->add_option("v", *v, "second word")->required();
    cmd->callback([u, v, &task] {
      task = [u, v] {
        bool eq = words_equal(FWord{parse_word(*u, 'a')}, FWord{parse_word(*v, 'a')});
        std::cout << (eq ? "equal" : "not equal") << "\n";
        return finish(eq);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("pl", "PL homeomorphism representing a word");
    auto word = std::make_shared<std::string>();
    cmd->add_option("word", *word, "word over a-letters")->required();
    cmd->callback([word, &task] {
      task = [word] {
        std::cout << render_plmap(to_pl(FWord{parse_word(*word, 'a')}));
        return finish(true);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("verify-presentation",
                                   "check the defining relations in the PL model");
    auto depth = std::make_shared<std::uint32_t>(10);
    cmd->add_option("--depth", *depth, "largest generator index")->capture_default_str();
    cmd->callback([depth, &task] {
      task = [depth] {
        bool ok = verify_presentation(*depth);
        std::cout << "relations a_i^-1 a_j a_i = a_{j+1} for i < j <= " << *depth << ": "
                  << (ok ? "hold" : "FAIL") << "\n";
        return finish(ok);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "verify-l31", "c_i = a_{3i}^-1 a_{3i+1} commute and are jointly free-abelian");
    auto imax = std::make_shared<std::uint32_t>(2);
    auto bound = std::make_shared<std::uint32_t>(2);
    cmd->add_option("--imax", *imax, "largest family index")->capture_default_str();
    cmd->add_option("--bound", *bound, "exponent bound")->capture_default_str();
    cmd->callback([imax, bound, &task] {
      task = [imax, bound] {
        bool ok = commuting_family_check(*imax, *bound);
        std::cout << "commuting family up to i = " << *imax << ", exponents up to "
                  << *bound << ": " << (ok ? "independent" : "FAIL") << "\n";
        return finish(ok);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("standard-form",
                                   "literal decomposition a_i^n s^{i+1}(b)");
    auto word = std::make_shared<std::string>();
    cmd->add_option("word", *word, "word over a-letters")->required();
    cmd->callback([word, &task] {
      task = [word] {
        auto form = standard_form_check(FWord{parse_word(*word, 'a')});
        if (!form.has_value()) return finish_none();
        std::cout << "i = " << form->i << "\n"
                  << "n = " << form->n << "\n"
                  << "b = " << render_word(form->b.word, 'a') << "\n";
        return finish(true);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("standard-form-search",
                                   "bounded conjugacy search for a standard form");
    auto word = std::make_shared<std::string>();
    auto radius = std::make_shared<std::uint32_t>(6);
    cmd->add_option("word", *word, "word over a-letters")->required();
    cmd->add_option("--radius", *radius, "conjugator length and index bound")
        ->capture_default_str();
    cmd->callback([word, radius, &task] {
      task = [word, radius] {
        auto hit = standard_form_search(FWord{parse_word(*word, 'a')}, *radius);
        if (!hit.has_value()) {
          std::cout << "no conjugator within radius " << *radius << "\n";
          return finish_none();
        }
        std::cout << "conjugator = " << render_word(hit->first.word, 'a') << "\n"
                  << "i = " << hit->second.i << "\n"
                  << "n = " << hit->second.n << "\n"
                  << "b = " << render_word(hit->second.b.word, 'a') << "\n";
        return finish(true);
      };
    });
  }

  // --- endomorphisms ---------------------------------------------------
  {
    auto* endo = app.add_subcommand("endo", "free-group endomorphism commands");
    endo->require_subcommand(1);
    {
      auto* cmd = endo->add_subcommand("check", "does f^2(x) = x0^-1 f(x) x0 hold?");
      auto file = std::make_shared<std::string>();
      cmd->add_option("file", *file, "endomorphism file")->required();
      cmd->callback([file, &task] {
        task = [file] {
          EndoSpec spec = parse_endo_spec(read_file(*file));
          bool ok = check_conj_idem(spec.endo, spec.x0.value_or(Word()));
          std::cout << (ok ? "conjugate-idempotent" : "condition fails") << "\n";
          return finish(ok);
        };
      });
    }
    {
      auto* cmd = endo->add_subcommand(
          "verify-identity", "check x_i^-k f^m(x) x_i^k = f^{m+k}(x) on the generators");
      auto file = std::make_shared<std::string>();
      auto m = std::make_shared<std::uint32_t>(0);
      auto i = std::make_shared<std::uint32_t>(0);
      auto k = std::make_shared<std::uint32_t>(1);
      cmd->add_option("file", *file, "endomorphism file")->required();
      cmd->add_option("--m", *m, "power of f on the left")->required();
      cmd->add_option("--i", *i, "index into the x-sequence")->required();
      cmd->add_option("--k", *k, "conjugation exponent")->capture_default_str();
      cmd->callback([file, m, i, k, &task] {
        task = [file, m, i, k] {
          ConjIdemWitness wit = witness_from_file(*file);
          bool ok = verify_conjugation_identity(wit, *m, *i, *k);
          std::cout << "x_" << *i << "^-" << *k << " f^" << *m << "(x) x_" << *i << "^"
                    << *k << " = f^" << (*m + *k) << "(x): " << (ok ? "holds" : "FAIL")
                    << "\n";
          return finish(ok);
        };
      });
    }
    {
      auto* cmd = endo->add_subcommand("e-hom", "image of an F-word under a_t -> f^t(x0)");
      auto file = std::make_shared<std::string>();
      auto word = std::make_shared<std::string>();
      cmd->add_option("file", *file, "endomorphism file")->required();
      cmd->add_option("word", *word, "word over a-letters")->required();
      cmd->callback([file, word, &task] {
        task = [file, word] {
          ConjIdemWitness wit = witness_from_file(*file);
          Word img = e_hom(wit, FWord{parse_word(*word, 'a')});
          std::cout << render_word(img, 'x') << "\n";
          return finish(true);
        };
      });
    }
    {
      auto* cmd = endo->add_subcommand("split", "split from a witness f^{i+1}(v) = x_i^k");
      auto file = std::make_shared<std::string>();
      auto i = std::make_shared<std::uint32_t>(0);
      auto k = std::make_shared<std::uint32_t>(1);
      auto witness = std::make_shared<std::string>();
      cmd->add_option("file", *file, "endomorphism file")->required();
      cmd->add_option("--i", *i, "index into the x-sequence")->capture_default_str();
      cmd->add_option("--k", *k, "exponent")->capture_default_str();
      cmd->add_option("--witness", *witness, "witness word v over x-letters")->required();
      cmd->callback([file, i, k, witness, &task] {
        task = [file, i, k, witness] {
          ConjIdemWitness wit = witness_from_file(*file);
          SplitResult res = splitting_power(wit, *i, *k, parse_word(*witness, 'x'));
          print_split(res);
          return finish(true);
        };
      });
    }
    {
      auto* cmd = endo->add_subcommand("split-from-kernel",
                                       "split from a kernel element in standard form");
      auto file = std::make_shared<std::string>();
      auto word = std::make_shared<std::string>();
      cmd->add_option("file", *file, "endomorphism file")->required();
      cmd->add_option("word", *word, "kernel word over a-letters")->required();
      cmd->callback([file, word, &task] {
        task = [file, word] {
          ConjIdemWitness wit = witness_from_file(*file);
          SplitResult res = kernel_witness_to_splitting(wit, FWord{parse_word(*word, 'a')});
          print_split(res);
          return finish(true);
        };
      });
    }
    {
      auto* cmd = endo->add_subcommand("is-inner", "is f conjugation by a single word?");
      auto file = std::make_shared<std::string>();
      auto bound = std::make_shared<std::uint32_t>(8);
      cmd->add_option("file", *file, "endomorphism file")->required();
      cmd->add_option("--bound", *bound, "cyclic exponent bound")->capture_default_str();
      cmd->callback([file, bound, &task] {
        task = [file, bound] {
          EndoSpec spec = parse_endo_spec(read_file(*file));
          InnerResult res = is_inner(spec.endo, *bound);
          switch (res.verdict) {
            case InnerVerdict::kFound:
              std::cout << "inner by " << render_word(*res.conjugator, 'x') << "\n";
              return finish(true);
            case InnerVerdict::kNotFoundWithinBound:
              std::cout << "no common conjugator within bound " << *bound << "\n";
              return finish_none();
            case InnerVerdict::kNotInner:
              std::cout << "not inner: some generator image is not conjugate to the "
                           "generator\n";
              return finish(false);
          }
          return 2;
        };
      });
    }
  }

  // --- graph pi1 -------------------------------------------------------
  {
    auto* pi1 = app.add_subcommand("pi1", "relative fundamental group of a graph");
    pi1->require_subcommand(1);
    {
      auto* cmd = pi1->add_subcommand("validate", "connectivity and base-subtree invariants");
      auto file = std::make_shared<std::string>();
      cmd->add_option("file", *file, "graph file")->required();
      cmd->callback([file, &task] {
        task = [file] {
          GraphComplex g = parse_graph(read_file(*file));
          bool ok = validate(g);
          std::cout << (ok ? "valid" : "invalid") << "\n";
          return finish(ok);
        };
      });
    }
    {
      auto* cmd = pi1->add_subcommand("class", "canonical representative of a path class");
      auto file = std::make_shared<std::string>();
      auto path = std::make_shared<std::string>();
      cmd->add_option("file", *file, "graph file")->required();
      cmd->add_option("path", *path, "edge path, e.g. \"e1 e0^-1 e2\"")->required();
      cmd->callback([file, path, &task] {
        task = [file, path] {
          GraphComplex g = parse_graph(read_file(*file));
          RelClass cls = class_of(g, parse_edge_path(*path, g));
          std::cout << render_edge_path(cls.canonical()) << "\n";
          return finish(true);
        };
      });
    }
    {
      auto* cmd = pi1->add_subcommand("product", "product of two path classes");
      auto file = std::make_shared<std::string>();
      auto p = std::make_shared<std::string>();
      auto q = std::make_shared<std::string>();
      cmd->add_option("file", *file, "graph file")->required();
      cmd->add_option("p", *p, "first edge path")->required();
      cmd->add_option("q", *q, "second edge path")->required();
      cmd->callback([file, p, q, &task] {
        task = [file, p, q] {
          GraphComplex g = parse_graph(read_file(*file));
          RelClass res = rel_product(g, class_of(g, parse_edge_path(*p, g)),
                                     class_of(g, parse_edge_path(*q, g)));
          std::cout << render_edge_path(res.canonical()) << "\n";
          return finish(true);
        };
      });
    }
    {
      auto* cmd = pi1->add_subcommand("enumerate", "classes with short canonical form");
      auto file = std::make_shared<std::string>();
      auto maxlen = std::make_shared<std::uint32_t>(3);
      cmd->add_option("file", *file, "graph file")->required();
      cmd->add_option("--maxlen", *maxlen, "canonical length bound")->capture_default_str();
      cmd->callback([file, maxlen, &task] {
        task = [file, maxlen] {
          GraphComplex g = parse_graph(read_file(*file));
          std::set<RelClass> classes = enumerate_classes(g, *maxlen);
          for (const RelClass& c : classes) {
            std::cout << "class " << render_edge_path(c.canonical()) << "\n";
          }
          std::cout << "count " << classes.size() << "\n";
          return finish(true);
        };
      });
    }
    {
      auto* cmd = pi1->add_subcommand("iso-check",
                                      "loops at x0 give the whole relative group");
      auto file = std::make_shared<std::string>();
      auto x0 = std::make_shared<std::uint32_t>(0);
      auto maxlen = std::make_shared<std::uint32_t>(6);
      cmd->add_option("file", *file, "graph file")->required();
      cmd->add_option("--x0", *x0, "base vertex")->capture_default_str();
      cmd->add_option("--maxlen", *maxlen, "loop length bound")->capture_default_str();
      cmd->callback([file, x0, maxlen, &task] {
        task = [file, x0, maxlen] {
          GraphComplex g = parse_graph(read_file(*file));
          bool ok = basepoint_iso_check(g, *x0, *maxlen);
          std::cout << "basepoint " << *x0 << ", loops up to " << *maxlen << ": "
                    << (ok ? "isomorphism verified" : "FAIL") << "\n";
          return finish(ok);
        };
      });
    }
  }

  // --- full verification -----------------------------------------------
  {
    auto* cmd = app.add_subcommand("verify-all", "run every verification item");
    auto profile = std::make_shared<std::string>("small");
    auto seed = std::make_shared<std::uint64_t>(0);
    cmd->add_option("--profile", *profile, "small or standard")
        ->check(CLI::IsMember({"small", "standard"}))
        ->capture_default_str();
    cmd->add_option("--seed", *seed, "seed for the randomized items")->capture_default_str();
    cmd->callback([profile, seed, &task] {
      task = [profile, seed] {
        Profile p = *profile == "standard" ? Profile::kStandard : Profile::kSmall;
        auto results = run_verification(p, *seed);
        for (const auto& r : results) {
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
        }
        return finish(all_passed(results));
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return task ? task() : 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    std::cout << "RESULT: fail" << "\n";
    return 1;
  }
}
