// slw: constructions, non-pinching and loxodromy certification from the
// command line.
//
// Exit codes: 0 PASS, 1 FAIL, 2 inconclusive or unsupported backend,
// 64 usage, 65 bad input data, 66 missing file.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slw/constructions.hpp"
#include "slw/io.hpp"
#include "slw/surfaces.hpp"
#include "slw/verify.hpp"

using namespace slw;

namespace {
  using json = nlohmann::ordered_json;

  constexpr int kUsage   = 64;
  constexpr int kData    = 65;
  constexpr int kNoInput = 66;

  class usage_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  std::optional<double> env_number(const char* name) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') {
      return std::nullopt;
    }
    char*  end = nullptr;
    double d   = std::strtod(v, &end);
    if (*end != '\0' || !(d > 0)) {
      throw usage_error(std::string(name) + " must be a positive number");
    }
    return d;
  }

  void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
      std::cout << text;
    } else {
      write_file(out, text);
    }
  }

  CertifiedRep load_rep(const std::string& path) {
    auto rep     = read_rep(read_file(path));
    auto inflate = env_number("SLW_INFLATE");
    if (auto* e = std::get_if<ExactRep>(&rep)) {
      return CertifiedRep(*e);
    }
    if (auto* d = std::get_if<NumRep>(&rep)) {
      return CertifiedRep(*d, inflate.value_or(1e-12));
    }
    return CertifiedRep(std::get<WideRep>(rep), static_cast<long double>(inflate.value_or(1e-30)));
  }

  ////////////////////////////////////////////////////////////////////////
  // construct
  ////////////////////////////////////////////////////////////////////////

  struct ConstructArgs {
    std::string name;
    int         n      = 2;
    int         m      = 1;
    int         genus  = 3;
    int         twists = 3;
    int         rank   = 2;
    std::string sub    = "four-holed";
    std::string base   = "free";
    std::string word;
    std::string out;
    std::string rep_out;
  };

  void need_n(const ConstructArgs& a) {
    if (a.n < 2) {
      throw usage_error(a.name + " needs --n >= 2");
    }
  }

  int run_construct(const ConstructArgs& a, std::uint64_t seed) {
    std::string text;
    std::string rep_text;
    try {
      if (a.name == "alpha") {
        need_n(a);
        text = write_map(alpha_map(a.n));
      } else if (a.name == "fig8") {
        need_n(a);
        text     = write_map(figure_eight_map(a.n));
        rep_text = write_rep(figure_eight_exact_rep());
      } else if (a.name == "twist") {
        need_n(a);
        if (a.m < 0) {
          throw usage_error("twist needs --m >= 0");
        }
        MarkedMap f = figure_eight_map(a.n);
        f.images    = twist_sequence(f.hom(), a.m).images();
        f.name      = "twist";
        f.params.emplace_back("m", a.m);
        f.kernel_witness.reset();
        f.witness_certificate.clear();
        text = write_map(f);
      } else if (a.name == "quotient") {
        need_n(a);
        if (a.sub == "four-holed") {
          if (a.genus < 3) {
            throw usage_error("the four-holed sphere needs --genus >= 3");
          }
          text = write_presentation(quotient_presentation(
              build_surface(a.genus, 0), Subsurface::four_holed_sphere, alpha_map(a.n).hom()));
        } else if (a.sub == "pants") {
          if (a.genus < 2) {
            throw usage_error("pants need --genus >= 2");
          }
          text = write_presentation(quotient_presentation(
              build_surface(a.genus, 0), Subsurface::pair_of_pants, figure_eight_map(a.n).hom()));
        } else {
          throw usage_error("--sub is four-holed or pants");
        }
      } else if (a.name == "closed") {
        need_n(a);
        if (a.genus < 3 || a.twists < 0) {
          throw usage_error("closed needs --genus >= 3 and --twists >= 0");
        }
        text = write_map(closed_from_boundary(a.n, a.genus, a.twists));
      } else if (a.name == "double") {
        need_n(a);
        text = write_map(double_presentation(a.n));
        CompositeOptions opt;
        opt.seed = seed;
        if (!a.rep_out.empty()) {
          rep_text = write_rep(composite_rep(a.n, opt));
        }
      } else if (a.name == "extend") {
        GroupPresentation g;
        if (a.base == "free") {
          if (a.rank < 1) {
            throw usage_error("extend needs --rank >= 1");
          }
          g = free_presentation(Alphabet::standard(static_cast<std::size_t>(a.rank)));
        } else if (a.base == "fig8") {
          g = figure_eight_presentation();
        } else if (a.base == "double") {
          need_n(a);
          g = double_presentation(a.n).target;
        } else {
          throw usage_error("--base is free, fig8 or double");
        }
        Word w = a.word.empty() ? Word::generator(0) : parse_word(a.word, g.alphabet);
        text   = write_presentation(extend_centralizers_presentation(g, w));
      } else {
        throw usage_error("unknown construction '" + a.name + "'");
      }
    } catch (const input_error& e) {
      throw usage_error(e.what());
    } catch (const domain_error& e) {
      throw usage_error(e.what());
    }
    if (!a.rep_out.empty()) {
      if (rep_text.empty()) {
        throw usage_error("--rep-out is available for fig8 and double");
      }
      write_file(a.rep_out, rep_text);
    }
    emit(text, a.out);
    return 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // verify, lox-verify
  ////////////////////////////////////////////////////////////////////////

  struct VerifyArgs {
    std::vector<std::string> subjects;
    VerifyConfig             cfg;
    std::string              backend = "auto";
    std::string              rep;
    std::string              out;
    std::vector<int>         n_range;
    int                      power = 0;
  };

  void finish_config(VerifyArgs& a) {
    if (!a.n_range.empty()) {
      if (a.n_range.size() != 2 || a.n_range[0] > a.n_range[1]) {
        throw usage_error("--n-range takes lo hi with lo <= hi");
      }
      a.cfg.n_range = std::make_pair(a.n_range[0], a.n_range[1]);
    }
    try {
      a.cfg.validate();
    } catch (const input_error& e) {
      throw usage_error(e.what());
    }
  }

  int report(const VerificationReport& r, const std::string& out) {
    emit(report_json(r), out);
    std::cerr << r.subject << ": " << to_string(r.verdict) << '\n';
    return exit_code(r.verdict);
  }

  int run_verify(VerifyArgs a) {
    finish_config(a);
    Backend backend = backend_from_string(a.backend);
    std::vector<MarkedMap> maps;
    for (auto const& s : a.subjects) {
      maps.push_back(read_map(read_file(s)));
    }
    if (maps.size() > 1) {
      return report(verify_sequence(maps, a.cfg), a.out);
    }
    std::optional<CertifiedRep> rep;
    if (!a.rep.empty()) {
      rep = load_rep(a.rep);
    }
    return report(verify_non_pinching(maps[0], a.cfg, backend, rep ? &*rep : nullptr), a.out);
  }

  int run_lox_verify(VerifyArgs a) {
    finish_config(a);
    GroupPresentation g = read_presentation(read_file(a.subjects[0]));
    CertifiedRep      rep = load_rep(a.rep);
    LoxodromySubject  s{std::filesystem::path(a.subjects[0]).filename().string(), g, std::nullopt};
    if (g.kind == "extension") {
      if (a.power == 0) {
        throw usage_error("extensions need --power n (the stable letter maps to a^n)");
      }
      std::optional<std::pair<std::string, Word>> stable, centralized;
      for (auto const& [name, w] : g.markers) {
        if (name.rfind("stable_", 0) == 0) {
          stable = {name.substr(7), w};
        } else if (name.rfind("centralized_", 0) == 0) {
          centralized = {name.substr(12), w};
        }
      }
      if (!stable || !centralized || stable->first != centralized->first ||
          stable->second.size() != 1) {
        throw input_error("extension lacks stable_ and centralized_ markers");
      }
      auto     t    = stable->second[0].gen();
      Alphabet base = Alphabet(std::vector<std::string>(g.alphabet.names().begin(),
                                                        g.alphabet.names().end() - 1));
      if (t + 1 != g.alphabet.size()) {
        throw input_error("the stable letter must be the last generator");
      }
      std::vector<Word> images;
      for (std::uint32_t i = 0; i < t; ++i) {
        images.push_back(Word::generator(i));
      }
      Word an;
      for (int i = 0; i < std::abs(a.power); ++i) {
        an *= centralized->second;
      }
      images.push_back(a.power > 0 ? an : an.inverse());
      s.collapse = FreeHom(g.alphabet, base, images);
    }
    return report(verify_all_loxodromic(s, rep, a.cfg), a.out);
  }

  ////////////////////////////////////////////////////////////////////////
  // si, enum, report-diff
  ////////////////////////////////////////////////////////////////////////

  int run_si(const std::string& surface, const std::string& word, bool oracle) {
    SurfacePresentation s;
    try {
      s = parse_surface_type(surface);
    } catch (const std::exception& e) {
      throw usage_error(e.what());
    }
    Word w = parse_word(word, s.alphabet);
    bool trivial = s.closed() ? is_trivial_in_surface(w, s) : cyclic_reduction(w).empty();
    if (trivial) {
      std::cerr << "error: the class of '" << word << "' is trivial\n";
      return kData;
    }
    json j;
    j["word"] = format_word(canonical_class(w, s), s.alphabet);
    j["si"]   = self_intersection(w, s);
    if (oracle) {
      auto r      = geodesic_intersection_oracle(w, s, env_number("SLW_ORACLE_PRECISION").value_or(1e-9));
      j["oracle"] = r.status == OracleStatus::ok ? json(r.count)
                    : r.status == OracleStatus::inconclusive ? json("inconclusive")
                                                             : json("unsupported");
    }
    std::cout << j.dump() << '\n';
    return 0;
  }

  int run_enum(const std::string& surface, int k, int L, unsigned jobs) {
    SurfacePresentation s;
    try {
      s = parse_surface_type(surface);
    } catch (const std::exception& e) {
      throw usage_error(e.what());
    }
    json classes = json::array();
    for (auto const& c : enumerate_k_simple(s, k, L, jobs)) {
      classes.push_back(json{{"word", format_word(c.word, s.alphabet)}, {"si", c.si}});
    }
    json j;
    j["surface"] = surface;
    j["k"]       = k;
    j["L"]       = L;
    j["count"]   = classes.size();
    j["classes"] = classes;
    std::cout << j.dump(1) << '\n';
    return 0;
  }

  int run_report_diff(const std::string& a, const std::string& b, bool with_runtime) {
    auto ra = parse_report(read_file(a));
    auto rb = parse_report(read_file(b));
    if (!with_runtime) {
      ra.runtime_seconds = rb.runtime_seconds = 0;
    }
    std::vector<std::string> diffs;
    auto field = [&](const char* name, bool same) {
      if (!same) {
        diffs.emplace_back(name);
      }
    };
    field("subject", ra.subject == rb.subject);
    field("config", ra.k == rb.k && ra.L == rb.L && ra.lox_L == rb.lox_L && ra.n == rb.n);
    field("hypotheses", ra.hypotheses == rb.hypotheses);
    field("witness", ra.witness == rb.witness);
    field("verdict", ra.verdict == rb.verdict);
    field("runtimeSeconds", ra.runtime_seconds == rb.runtime_seconds);
    field("version", ra.version == rb.version);
    if (ra.classes.size() != rb.classes.size()) {
      diffs.push_back("classes: " + std::to_string(ra.classes.size()) + " vs " +
                      std::to_string(rb.classes.size()));
    } else {
      for (std::size_t i = 0; i < ra.classes.size(); ++i) {
        if (!(ra.classes[i] == rb.classes[i])) {
          diffs.push_back("classes[" + std::to_string(i) + "]: " + ra.classes[i].word + " " +
                          to_string(ra.classes[i].status) + " vs " + rb.classes[i].word + " " +
                          to_string(rb.classes[i].status));
        }
      }
    }
    if (diffs.empty()) {
      std::cout << "identical\n";
      return 0;
    }
    for (auto const& d : diffs) {
      std::cout << "differs: " << d << '\n';
    }
    return 1;
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-pinching and all-loxodromic certificates for surface group maps", "slw"};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for perturbed solver starts (0: exact seed)");

  ConstructArgs ca;
  auto*         construct = app.add_subcommand("construct", "Write a map or presentation file");
  construct->add_option("name", ca.name, "alpha, fig8, twist, quotient, closed, double, extend")
      ->required()
      ->check(CLI::IsMember({"alpha", "fig8", "twist", "quotient", "closed", "double", "extend"}));
  construct->add_option("--n", ca.n, "Sequence index")->check(CLI::NonNegativeNumber);
  construct->add_option("--m", ca.m, "Twist power")->check(CLI::NonNegativeNumber);
  construct->add_option("--genus", ca.genus, "Closed surface genus")->check(CLI::PositiveNumber);
  construct->add_option("--twists", ca.twists, "Twisted retractions")->check(CLI::NonNegativeNumber);
  construct->add_option("--rank", ca.rank, "Free rank for extend")->check(CLI::PositiveNumber);
  construct->add_option("--sub", ca.sub, "four-holed or pants");
  construct->add_option("--base", ca.base, "free, fig8 or double");
  construct->add_option("--word", ca.word, "Word whose centralizer is extended");
  construct->add_option("-o,--out", ca.out, "Output path (default stdout)");
  construct->add_option("--rep-out", ca.rep_out, "Also write the matching representation");

  VerifyArgs va;
  auto*      verify = app.add_subcommand("verify", "Certify non-pinching of a map");
  verify->add_option("subject", va.subjects, "Map file; several files check a sequence")
      ->required();
  verify->add_option("--k", va.cfg.k, "Max self-intersection")->check(CLI::NonNegativeNumber);
  verify->add_option("--L", va.cfg.L, "Max cyclic length")->check(CLI::PositiveNumber);
  verify->add_option("--lox-L", va.cfg.lox_L, "Max length for loxodromy sweeps")
      ->check(CLI::PositiveNumber);
  verify->add_option("--coupling-L", va.cfg.coupling_L, "Max length for the 4k+4 check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--backend", va.backend, "auto, free, fig8-exact, retraction, loxodromy");
  verify->add_option("--rep", va.rep, "Representation JSON for the loxodromy backend");
  verify->add_option("--n-range", va.n_range, "Sequence index range lo hi")->expected(2);
  verify->add_option("--overlap-threshold", va.cfg.overlap_threshold,
                     "Bound on o(f_n(b_i)) at the top of the range")
      ->check(CLI::Range(0.0, 1.0));
  verify->add_option("-o,--out", va.out, "Report path (default stdout)");
  verify->add_option("--jobs", va.cfg.jobs, "Worker threads (0: all cores)");
  verify->add_flag("--timing", va.cfg.timing, "Record the runtime in the report");

  VerifyArgs la;
  auto*      lox = app.add_subcommand("lox-verify", "Certify all-loxodromic images");
  lox->add_option("subject", la.subjects, "Presentation file")->required()->expected(1);
  lox->add_option("--rep", la.rep, "Representation JSON")->required();
  lox->add_option("--lox-L", la.cfg.lox_L, "Max word length")->check(CLI::PositiveNumber);
  lox->add_option("--power", la.power, "For extensions: the stable letter maps to a^power");
  lox->add_option("-o,--out", la.out, "Report path (default stdout)");
  lox->add_option("--jobs", la.cfg.jobs, "Worker threads (0: all cores)");
  lox->add_flag("--timing", la.cfg.timing, "Record the runtime in the report");

  std::string si_surface, si_word;
  bool        si_oracle = false;
  auto*       si        = app.add_subcommand("si", "Self-intersection number of a curve");
  si->add_option("--surface", si_surface, "g,b")->required();
  si->add_option("--word", si_word, "Word in the standard generators")->required();
  si->add_flag("--oracle", si_oracle, "Also run the geodesic oracle");

  std::string en_surface;
  int         en_k = 0, en_L = 1;
  unsigned    en_jobs = 0;
  auto*       en      = app.add_subcommand("enum", "List k-simple classes");
  en->add_option("--surface", en_surface, "g,b")->required();
  en->add_option("--k", en_k, "Max self-intersection")->check(CLI::NonNegativeNumber);
  en->add_option("--L", en_L, "Max cyclic length")->check(CLI::PositiveNumber);
  en->add_option("--jobs", en_jobs, "Worker threads (0: all cores)");

  std::string rd_a, rd_b;
  bool        rd_runtime = false;
  auto*       rd         = app.add_subcommand("report-diff", "Compare two reports");
  rd->add_option("a", rd_a)->required();
  rd->add_option("b", rd_b)->required();
  rd->add_flag("--runtime", rd_runtime, "Also compare runtimeSeconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) {
      return run_construct(ca, seed);
    }
    if (*verify) {
      return run_verify(va);
    }
    if (*lox) {
      return run_lox_verify(la);
    }
    if (*si) {
      return run_si(si_surface, si_word, si_oracle);
    }
    if (*en) {
      return run_enum(en_surface, en_k, en_L, en_jobs);
    }
    if (*rd) {
      return run_report_diff(rd_a, rd_b, rd_runtime);
    }
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const file_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNoInput;
  } catch (const unsupported_backend& e) {
    std::cerr << "unsupported backend: " << e.what() << '\n';
    return 2;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kData;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 70;
  }
  return kUsage;
}
