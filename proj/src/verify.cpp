#include "slw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "slw/surfaces.hpp"

namespace slw {

  namespace {
    using json = nlohmann::ordered_json;

    // Runs body(i) for i < n on `jobs` threads; results land by index.
    template <typename Body>
    void parallel_for(std::size_t n, unsigned jobs, Body body) {
      if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
      }
      jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
      std::atomic<std::size_t> next{0};
      std::exception_ptr       error;
      std::atomic<bool>        failed{false};
      auto                     work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n && !failed;) {
          try {
            body(i);
          } catch (...) {
            if (!failed.exchange(true)) {
              error = std::current_exception();
            }
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < jobs; ++t) {
        pool.emplace_back(work);
      }
      work();
      for (auto& t : pool) {
        t.join();
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }

    std::string rational_text(const Rational& r) {
      return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    }

    // Seconds since start, or 0 when timing is off so reports stay byte-stable.
    double elapsed(std::chrono::steady_clock::time_point start, bool timing) {
      if (!timing) {
        return 0;
      }
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    // Certifies that f and g are not conjugate as maps: some test word has
    // nonconjugate images.
    bool certified_nonconjugate(const MarkedMap& f, const MarkedMap& g) {
      std::vector<Word> tests = f.source.boundary_words;
      auto              rank  = static_cast<std::uint32_t>(f.source.alphabet.size());
      for (std::uint32_t i = 0; i < rank; ++i) {
        tests.push_back(Word::generator(i));
        for (std::uint32_t j = 0; j < i; ++j) {
          tests.push_back(Word::generator(j) * Word::generator(i));
          tests.push_back(Word::generator(j) * Word::generator(i, -1));
        }
      }
      for (auto const& t : tests) {
        if (!is_conjugate(f(t), g(t))) {
          return true;
        }
      }
      return false;
    }

    std::string map_label(const MarkedMap& m) {
      std::string s = m.name;
      for (auto const& [k, v] : m.params) {
        s += " " + k + "=" + std::to_string(v);
      }
      return s;
    }

    bool nontrivial_in_source(const Word& w, const SurfacePresentation& s) {
      if (s.closed()) {
        return !dehn_reduce(w, s).empty();
      }
      return !w.empty();
    }
  }  // namespace

  void VerifyConfig::validate() const {
    if (k < 0) {
      throw input_error("k must be nonnegative");
    }
    if (L < 1 || lox_L < 1 || coupling_L < 1) {
      throw input_error("length cutoffs must be positive");
    }
    if (n_range && n_range->first > n_range->second) {
      throw input_error("empty n range");
    }
    if (!(overlap_threshold > 0)) {
      throw input_error("overlap threshold must be positive");
    }
  }

  const char* to_string(ClassStatus s) {
    switch (s) {
      case ClassStatus::nontrivial: return "nontrivial-certified";
      case ClassStatus::loxodromic: return "loxodromic-certified";
      case ClassStatus::trivial: return "trivial";
      case ClassStatus::parabolic: return "parabolic";
      case ClassStatus::elliptic: return "elliptic";
      case ClassStatus::identity: return "identity";
      case ClassStatus::unknown: return "unknown";
      case ClassStatus::excluded: return "excluded";
    }
    return "unknown";
  }

  ClassStatus class_status_from_string(const std::string& s) {
    for (auto v : {ClassStatus::nontrivial, ClassStatus::loxodromic, ClassStatus::trivial,
                   ClassStatus::parabolic, ClassStatus::elliptic, ClassStatus::identity,
                   ClassStatus::unknown, ClassStatus::excluded}) {
      if (s == to_string(v)) {
        return v;
      }
    }
    throw input_error("unknown class status '" + s + "'");
  }

  bool is_failure(ClassStatus s) {
    return s == ClassStatus::trivial || s == ClassStatus::parabolic ||
           s == ClassStatus::elliptic || s == ClassStatus::identity;
  }

  const char* to_string(HypothesisStatus s) {
    switch (s) {
      case HypothesisStatus::verified: return "verified";
      case HypothesisStatus::assumed: return "assumed";
      case HypothesisStatus::failed: return "failed";
    }
    return "failed";
  }

  HypothesisStatus hypothesis_status_from_string(const std::string& s) {
    for (auto v : {HypothesisStatus::verified, HypothesisStatus::assumed, HypothesisStatus::failed}) {
      if (s == to_string(v)) {
        return v;
      }
    }
    throw input_error("unknown hypothesis status '" + s + "'");
  }

  const char* to_string(Verdict v) {
    switch (v) {
      case Verdict::pass: return "PASS";
      case Verdict::fail: return "FAIL";
      case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
  }

  Verdict verdict_from_string(const std::string& s) {
    for (auto v : {Verdict::pass, Verdict::fail, Verdict::inconclusive}) {
      if (s == to_string(v)) {
        return v;
      }
    }
    throw input_error("unknown verdict '" + s + "'");
  }

  int exit_code(Verdict v) {
    switch (v) {
      case Verdict::pass: return 0;
      case Verdict::fail: return 1;
      case Verdict::inconclusive: return 2;
    }
    return 2;
  }

  const char* to_string(Backend b) {
    switch (b) {
      case Backend::automatic: return "auto";
      case Backend::free: return "free";
      case Backend::fig8_exact: return "fig8-exact";
      case Backend::retraction: return "retraction";
      case Backend::loxodromy: return "loxodromy";
    }
    return "auto";
  }

  Backend backend_from_string(const std::string& s) {
    for (auto b : {Backend::automatic, Backend::free, Backend::fig8_exact, Backend::retraction,
                   Backend::loxodromy}) {
      if (s == to_string(b)) {
        return b;
      }
    }
    throw unsupported_backend("unknown backend '" + s + "'");
  }

  Verdict decide(const VerificationReport& r) {
    bool unknown = false;
    for (auto const& h : r.hypotheses) {
      if (h.status == HypothesisStatus::failed) {
        return Verdict::fail;
      }
    }
    for (auto const& c : r.classes) {
      if (is_failure(c.status)) {
        return Verdict::fail;
      }
      unknown = unknown || c.status == ClassStatus::unknown;
    }
    if (r.witness) {
      if (r.witness->source_status == "trivial" || r.witness->image_status == "nontrivial") {
        return Verdict::fail;
      }
      unknown = unknown || !r.witness->certified();
    }
    return unknown ? Verdict::inconclusive : Verdict::pass;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certified classification
  ////////////////////////////////////////////////////////////////////////

  CertifiedRep::CertifiedRep(ExactRep rep)
      : exact_(std::move(rep)),
        fast_(to_boxes<double>(*exact_)),
        fine_(to_boxes<__float128>(*exact_)) {}

  CertifiedRep::CertifiedRep(const WideRep& rep, long double inflate)
      : fast_(to_boxes<double>(rep, inflate)), fine_(to_boxes<__float128>(rep, inflate)) {}

  CertifiedRep::CertifiedRep(const NumRep& rep, double inflate)
      : fast_(to_boxes<double>(rep, inflate)), fine_(to_boxes<__float128>(rep, inflate)) {}

  IsometryClass CertifiedRep::classify(const Word& w) const {
    if (exact_) {
      return slw::classify(exact_->evaluate(w));
    }
    try {
      auto c = slw::classify(fast_, w);
      if (c.certified) {
        return c;
      }
    } catch (const domain_error&) {
    }
    try {
      return slw::classify(fine_, w);
    } catch (const domain_error&) {
      return {};
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Sequence hypotheses
  ////////////////////////////////////////////////////////////////////////

  std::vector<Hypothesis> check_sequence_hypotheses(const std::vector<MarkedMap>& maps,
                                                    const VerifyConfig&           cfg) {
    cfg.validate();
    if (maps.empty()) {
      throw input_error("empty map sequence");
    }
    for (auto const& m : maps) {
      if (!(m.source.alphabet == maps[0].source.alphabet) ||
          m.source.genus != maps[0].source.genus ||
          m.source.boundary_count != maps[0].source.boundary_count ||
          !(m.target.alphabet == maps[0].target.alphabet)) {
        throw input_error("maps in a sequence must share source and target shape");
      }
      if (m.target.kind != "free") {
        throw input_error("sequence hypotheses need maps to a free group");
      }
    }
    std::vector<Hypothesis> out;
    auto                    label = [&](std::size_t i) {
      auto const& p = maps[i].params;
      for (auto const& [k, v] : p) {
        if (k == "n") {
          return "n=" + std::to_string(v);
        }
      }
      return "#" + std::to_string(i);
    };
    auto ok = [](bool b) { return b ? HypothesisStatus::verified : HypothesisStatus::failed; };

    std::vector<Rational> overlap;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      auto const&       m = maps[i];
      std::vector<Word> bd;
      for (auto const& b : m.source.boundary_words) {
        bd.push_back(m(b));
      }
      bool nontrivial = std::none_of(bd.begin(), bd.end(), [](const Word& w) { return w.empty(); });
      out.push_back({label(i) + ": boundary images nontrivial", ok(nontrivial),
                     std::to_string(bd.size()) + " boundary components"});

      bool        distinct = nontrivial;
      std::string clash;
      for (std::size_t a = 0; distinct && a < bd.size(); ++a) {
        for (std::size_t b = 0; distinct && b < a; ++b) {
          if (conjugate_centralizers(bd[a], bd[b])) {
            distinct = false;
            clash    = "b" + std::to_string(b + 1) + " and b" + std::to_string(a + 1);
          }
        }
      }
      out.push_back({label(i) + ": nonconjugate centralizers", ok(distinct),
                     distinct ? "primitive roots pairwise nonconjugate" : "conjugate roots: " + clash});

      bool onto = stallings_analysis(m.hom()).surjective;
      out.push_back({label(i) + ": surjective", ok(onto), "Stallings folding"});

      Rational worst(0);
      for (auto const& w : bd) {
        if (!w.empty()) {
          worst = std::max(worst, overlap_ratio(w));
        }
      }
      overlap.push_back(worst);
    }

    bool        monotone = true;
    std::string values;
    for (std::size_t i = 0; i < overlap.size(); ++i) {
      monotone = monotone && (i == 0 || overlap[i] <= overlap[i - 1]);
      values += (i ? ", " : "") + label(i) + ": " + rational_text(overlap[i]);
    }
    double last = boost::rational_cast<double>(overlap.back());
    out.push_back({"overlap ratios decay", ok(monotone && last < cfg.overlap_threshold),
                   "max o(f(b_i)) " + values + "; threshold " + std::to_string(cfg.overlap_threshold)});

    bool        pairwise = true;
    std::string pair;
    for (std::size_t i = 0; pairwise && i < maps.size(); ++i) {
      for (std::size_t j = 0; pairwise && j < i; ++j) {
        if (!certified_nonconjugate(maps[i], maps[j])) {
          pairwise = false;
          pair     = label(j) + " and " + label(i);
        }
      }
    }
    out.push_back({"maps pairwise nonconjugate", ok(pairwise),
                   pairwise ? "test words with nonconjugate images found for every pair"
                            : "no distinguishing test word for " + pair});

    out.push_back({"Mod(S)-inequivalence", HypothesisStatus::assumed,
                   "not checked: deciding Mod(S)-equivalence of maps is out of scope"});
    return out;
  }

  VerificationReport verify_sequence(const std::vector<MarkedMap>& maps, const VerifyConfig& cfg) {
    auto               start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.hypotheses = check_sequence_hypotheses(maps, cfg);
    r.subject    = "sequence " + maps.front().name + " (" + std::to_string(maps.size()) + " maps)";
    r.k          = cfg.k;
    r.L          = cfg.L;
    r.lox_L      = cfg.lox_L;
    r.n          = cfg.n_range;
    r.verdict    = decide(r);
    r.runtime_seconds = elapsed(start, cfg.timing);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Non-pinching and noninjectivity
  ////////////////////////////////////////////////////////////////////////

  WitnessRecord witness_record(const MarkedMap& m, const Word& w) {
    WitnessRecord rec;
    rec.word          = format_word(w, m.source.alphabet);
    rec.source_status = nontrivial_in_source(w, m.source) ? "nontrivial-certified" : "trivial";
    if (rec.source_status != "trivial") {
      try {
        rec.si = self_intersection(w, m.source);
      } catch (const std::exception&) {
        rec.si.reset();
      }
    }

    Word img         = m(w);
    rec.image_status = "unknown";
    const auto& kind = m.target.kind;
    if (img.empty()) {
      rec.image_status = "trivial-certified";
    } else if (kind == "free") {
      rec.image_status = "nontrivial";
    } else if (kind == "figure-eight" || (kind == "double" && img.max_generator_bound() <= 2)) {
      rec.image_status = trivial_in_figure_eight(img) ? "trivial-certified" : "nontrivial";
    } else if (!m.witness_certificate.empty() &&
               is_conjugate(img, expand(m.witness_certificate, m.target))) {
      rec.image_status = "trivial-certified";
    }
    if (rec.image_status == "unknown") {
      for (auto const& h : m.retractions) {
        if (!h(img).empty()) {
          rec.image_status = "nontrivial";
          break;
        }
      }
    }
    return rec;
  }

  VerificationReport verify_noninjective(const MarkedMap& m) {
    VerificationReport r;
    r.subject = "noninjective " + map_label(m);
    std::optional<Word> w = m.kernel_witness;
    if (!w && m.target.kind == "free") {
      w = kernel_witness(m.hom());
    }
    if (w) {
      r.witness = witness_record(m, *w);
      r.verdict = decide(r);
    } else {
      r.hypotheses.push_back({"kernel witness", HypothesisStatus::assumed,
                              "none derivable; injectivity is not claimed"});
      r.verdict = Verdict::inconclusive;
    }
    return r;
  }

  VerificationReport verify_non_pinching(const MarkedMap& m, const VerifyConfig& cfg,
                                         Backend backend, const CertifiedRep* rep) {
    cfg.validate();
    auto start = std::chrono::steady_clock::now();
    if (backend == Backend::automatic) {
      if (m.target.kind == "free") {
        backend = Backend::free;
      } else if (m.target.kind == "figure-eight") {
        backend = Backend::fig8_exact;
      } else if (rep) {
        backend = Backend::loxodromy;
      } else if (!m.retractions.empty()) {
        backend = Backend::retraction;
      } else {
        throw unsupported_backend("no triviality oracle for target kind '" + m.target.kind + "'");
      }
    }
    switch (backend) {
      case Backend::free:
        if (m.target.kind != "free") {
          throw unsupported_backend("free backend needs a free target");
        }
        break;
      case Backend::fig8_exact:
        if (m.target.kind != "figure-eight") {
          throw unsupported_backend("fig8-exact backend needs the figure-eight group as target");
        }
        break;
      case Backend::retraction:
        if (m.retractions.empty()) {
          throw unsupported_backend("retraction backend needs retractions onto a free group");
        }
        break;
      case Backend::loxodromy:
        if (!rep) {
          throw unsupported_backend("loxodromy backend needs a representation");
        }
        if (!(rep->alphabet() == m.target.alphabet)) {
          throw input_error("representation is not over the target alphabet");
        }
        break;
      case Backend::automatic: break;
    }

    auto classes = enumerate_k_simple(m.source, cfg.k, cfg.L, cfg.jobs);
    VerificationReport r;
    r.subject = map_label(m) + " via " + to_string(backend);
    r.k       = cfg.k;
    r.L       = cfg.L;
    r.lox_L   = cfg.lox_L;
    if (auto const& p = m.params; !p.empty()) {
      for (auto const& [k, v] : p) {
        if (k == "n") {
          r.n = std::make_pair(static_cast<int>(v), static_cast<int>(v));
        }
      }
    }
    r.classes.resize(classes.size());
    FreeHom hom = m.hom();
    parallel_for(classes.size(), cfg.jobs, [&](std::size_t i) {
      auto const& c   = classes[i];
      Word        img = cyclic_reduction(hom(c.word));
      ClassStatus st  = ClassStatus::unknown;
      switch (backend) {
        case Backend::free: st = img.empty() ? ClassStatus::trivial : ClassStatus::nontrivial; break;
        case Backend::fig8_exact:
          st = trivial_in_figure_eight(img) ? ClassStatus::trivial : ClassStatus::nontrivial;
          break;
        case Backend::retraction:
          for (auto const& h : m.retractions) {
            if (!cyclic_reduction(h(img)).empty()) {
              st = ClassStatus::nontrivial;
              break;
            }
          }
          break;
        case Backend::loxodromy:
          if (rep->classify(img).kind == Isometry::loxodromic) {
            st = ClassStatus::loxodromic;
          }
          break;
        case Backend::automatic: break;
      }
      r.classes[i] = {format_word(c.word, m.source.alphabet), c.si, st};
    });

    if (m.name == "closed") {
      // The boundary map must itself be non-(4k+4)-pinching on S'.
      VerifyConfig sub = cfg;
      sub.k            = cfg.boundary_k();
      sub.L            = std::min(cfg.coupling_L, cfg.L);
      sub.timing       = false;
      auto f           = alpha_map(static_cast<int>(m.param("n")));
      auto fr          = verify_non_pinching(f, sub, Backend::free);
      std::size_t bad  = 0;
      for (auto const& c : fr.classes) {
        bad += c.status != ClassStatus::nontrivial;
      }
      r.hypotheses.push_back(
          {"boundary map non-" + std::to_string(sub.k) + "-pinching (4k+4)",
           bad == 0 ? HypothesisStatus::verified : HypothesisStatus::failed,
           "alpha n=" + std::to_string(m.param("n")) + " on the four-holed sphere, " +
               std::to_string(fr.classes.size()) + " classes with si <= " +
               std::to_string(sub.k) + " and length <= " + std::to_string(sub.L) + ", " +
               std::to_string(bad) + " killed"});
    }

    if (m.kernel_witness) {
      r.witness = witness_record(m, *m.kernel_witness);
    }
    r.verdict         = decide(r);
    r.runtime_seconds = elapsed(start, cfg.timing);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // All-loxodromic sweeps
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> enumerate_cyclic_classes(std::size_t rank, int max_len) {
    if (rank == 0 || max_len < 1) {
      return {};
    }
    std::vector<Word>   out;
    std::vector<Letter> cur;
    auto                letters = static_cast<std::uint32_t>(2 * rank);
    // The first letter is minimal among all letters and their inverses.
    auto rec = [&](auto&& self, std::size_t len) -> void {
      if (cur.size() == len) {
        if (cur.back() == cur.front().inv()) {
          return;
        }
        Word w(cur);
        if (cyclic_normal_form(w, true).representative == w) {
          out.push_back(std::move(w));
        }
        return;
      }
      for (std::uint32_t c = cur.empty() ? 0 : cur.front().code; c < letters; ++c) {
        Letter l{c};
        if (!cur.empty() && (l == cur.back().inv() || l.inv() < cur.front())) {
          continue;
        }
        if (cur.empty() && l.inverse()) {
          continue;
        }
        cur.push_back(l);
        self(self, len);
        cur.pop_back();
      }
    };
    for (int len = 1; len <= max_len; ++len) {
      rec(rec, static_cast<std::size_t>(len));
    }
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
  }

  VerificationReport verify_all_loxodromic(const LoxodromySubject& s, const CertifiedRep& rep,
                                           const VerifyConfig& cfg) {
    cfg.validate();
    auto start = std::chrono::steady_clock::now();
    if (!(rep.alphabet() == s.group.alphabet)) {
      throw input_error("representation is not over the group's alphabet");
    }
    auto const& kind = s.group.kind;
    if (kind != "free" && kind != "figure-eight" && kind != "extension") {
      throw unsupported_backend("no triviality oracle for source kind '" + kind + "'");
    }
    if (kind == "extension" && !s.collapse) {
      throw input_error("extension subjects need the collapse map");
    }
    auto classes = enumerate_cyclic_classes(s.group.alphabet.size(), cfg.lox_L);
    VerificationReport r;
    r.subject = "all-loxodromic " + s.description;
    r.k       = cfg.k;
    r.L       = cfg.L;
    r.lox_L   = cfg.lox_L;
    r.n       = cfg.n_range;
    r.classes.resize(classes.size());
    parallel_for(classes.size(), cfg.jobs, [&](std::size_t i) {
      Word const& w  = classes[i];
      ClassStatus st = ClassStatus::unknown;
      if (kind == "figure-eight" && trivial_in_figure_eight(w)) {
        st = ClassStatus::excluded;
      } else if (kind == "extension" && cyclic_reduction((*s.collapse)(w)).empty()) {
        st = ClassStatus::excluded;
      } else {
        auto c = rep.classify(w);
        if (c.certified) {
          switch (c.kind) {
            case Isometry::loxodromic: st = ClassStatus::loxodromic; break;
            case Isometry::parabolic: st = ClassStatus::parabolic; break;
            case Isometry::elliptic: st = ClassStatus::elliptic; break;
            case Isometry::identity: st = ClassStatus::identity; break;
            case Isometry::unknown: break;
          }
        }
      }
      r.classes[i] = {format_word(w, s.group.alphabet), std::nullopt, st};
    });
    r.verdict         = decide(r);
    r.runtime_seconds = elapsed(start, cfg.timing);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  std::string report_json(const VerificationReport& r) {
    json j;
    j["subject"] = r.subject;
    json cfg;
    cfg["k"]    = r.k;
    cfg["L"]    = r.L;
    cfg["Llox"] = r.lox_L;
    if (!r.n) {
      cfg["n"] = nullptr;
    } else if (r.n->first == r.n->second) {
      cfg["n"] = r.n->first;
    } else {
      cfg["n"] = json::array({r.n->first, r.n->second});
    }
    j["config"]     = cfg;
    j["hypotheses"] = json::array();
    for (auto const& h : r.hypotheses) {
      j["hypotheses"].push_back({{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
    }
    j["classes"] = json::array();
    for (auto const& c : r.classes) {
      json e;
      e["word"] = c.word;
      e["si"]   = c.si ? json(*c.si) : json(nullptr);
      e["status"] = to_string(c.status);
      j["classes"].push_back(std::move(e));
    }
    if (r.witness) {
      json w;
      w["word"]         = r.witness->word;
      w["si"]           = r.witness->si ? json(*r.witness->si) : json(nullptr);
      w["sourceStatus"] = r.witness->source_status;
      w["imageStatus"]  = r.witness->image_status;
      j["witness"]      = w;
    } else {
      j["witness"] = nullptr;
    }
    j["verdict"]        = to_string(r.verdict);
    j["runtimeSeconds"] = r.runtime_seconds;
    j["version"]        = r.version;
    return j.dump(1) + "\n";
  }

  VerificationReport parse_report(const std::string& text) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw input_error(std::string("report is not valid JSON: ") + e.what());
    }
    try {
      VerificationReport r;
      r.subject       = j.at("subject").get<std::string>();
      auto const& cfg = j.at("config");
      r.k             = cfg.at("k").get<int>();
      r.L             = cfg.at("L").get<int>();
      r.lox_L         = cfg.at("Llox").get<int>();
      auto const& n   = cfg.at("n");
      if (n.is_number_integer()) {
        r.n = std::make_pair(n.get<int>(), n.get<int>());
      } else if (n.is_array()) {
        r.n = std::make_pair(n.at(0).get<int>(), n.at(1).get<int>());
      }
      for (auto const& h : j.at("hypotheses")) {
        r.hypotheses.push_back({h.at("name").get<std::string>(),
                                hypothesis_status_from_string(h.at("status").get<std::string>()),
                                h.at("detail").get<std::string>()});
      }
      for (auto const& c : j.at("classes")) {
        ClassResult cr;
        cr.word = c.at("word").get<std::string>();
        if (!c.at("si").is_null()) {
          cr.si = c.at("si").get<int>();
        }
        cr.status = class_status_from_string(c.at("status").get<std::string>());
        r.classes.push_back(std::move(cr));
      }
      if (auto const& w = j.at("witness"); !w.is_null()) {
        WitnessRecord rec;
        rec.word = w.at("word").get<std::string>();
        if (!w.at("si").is_null()) {
          rec.si = w.at("si").get<int>();
        }
        rec.source_status = w.at("sourceStatus").get<std::string>();
        rec.image_status  = w.at("imageStatus").get<std::string>();
        r.witness         = rec;
      }
      r.verdict         = verdict_from_string(j.at("verdict").get<std::string>());
      r.runtime_seconds = j.at("runtimeSeconds").get<double>();
      r.version         = j.at("version").get<std::string>();
      return r;
    } catch (const json::exception& e) {
      throw input_error(std::string("report does not match the schema: ") + e.what());
    }
  }

  WideRep composite_rep(int n, const CompositeOptions& opt) {
    if (n < 2) {
      throw input_error("composite representation needs n >= 2");
    }
    auto   pres = figure_eight_presentation();
    NumRep seed = to_numeric(figure_eight_exact_rep());
    if (opt.seed != 0) {
      std::mt19937_64                        gen(opt.seed);
      std::uniform_real_distribution<double> noise(-0.05, 0.05);
      std::vector<NumMat>                    mats;
      for (auto m : seed.images()) {
        for (cplx* e : {&m.a, &m.b, &m.c, &m.d}) {
          *e += cplx(noise(gen), noise(gen));
        }
        mats.push_back(m);
      }
      seed = NumRep(seed.alphabet(), mats);
    }
    SolveOptions so;
    so.traces     = {{Word::generator(0), opt.meridian_trace}};
    so.loxodromic = {Word::generator(0)};
    auto sol      = solve_relator_rep(pres, seed, so);
    auto wide     = refine_relator_rep(pres, sol.rep, so);
    return double_rep(wide, figure_eight_edge_words(n), opt.bend, opt.vertex_bend);
  }

  void emit_report(const VerificationReport& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write " + path);
    }
    out << report_json(r);
    if (!out) {
      throw std::runtime_error("write failed: " + path);
    }
  }

}  // namespace slw
