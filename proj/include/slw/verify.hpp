// Certification harness: sequence hypotheses, non-pinching up to length L,
// all-loxodromic sweeps, noninjectivity witnesses and JSON reports.

#ifndef SLW_VERIFY_HPP_
#define SLW_VERIFY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slw/constructions.hpp"
#include "slw/sl2.hpp"

namespace slw {

  inline constexpr const char* version_string = "slw 1.0.0";

  class unsupported_backend : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct VerifyConfig {
    int                                k     = 0;
    int                                L     = 1;
    int                                lox_L = 8;
    std::optional<std::pair<int, int>> n_range;
    unsigned                           jobs = 0;  // 0: hardware concurrency
    // o(f_n(b_i)) must end below this at the top of the range.
    double overlap_threshold = 0.3;
    // Length cutoff for the 4k+4 check of a boundary map on its subsurface.
    int  coupling_L = 8;
    bool timing     = false;

    int  boundary_k() const { return 4 * k + 4; }
    void validate() const;
  };

  enum class ClassStatus {
    nontrivial,  // certified nontrivial image
    loxodromic,  // certified loxodromic image
    trivial,
    parabolic,
    elliptic,
    identity,
    unknown,
    excluded  // in the kernel of the collapse H -> G
  };
  const char* to_string(ClassStatus s);
  ClassStatus class_status_from_string(const std::string& s);
  bool        is_failure(ClassStatus s);

  enum class HypothesisStatus { verified, assumed, failed };
  const char*      to_string(HypothesisStatus s);
  HypothesisStatus hypothesis_status_from_string(const std::string& s);

  struct Hypothesis {
    std::string      name;
    HypothesisStatus status = HypothesisStatus::failed;
    std::string      detail;

    bool operator==(const Hypothesis&) const = default;
  };

  struct ClassResult {
    std::string        word;
    std::optional<int> si;
    ClassStatus        status = ClassStatus::unknown;

    bool operator==(const ClassResult&) const = default;
  };

  struct WitnessRecord {
    std::string        word;
    std::optional<int> si;
    std::string        source_status;  // nontrivial-certified | unknown
    std::string        image_status;   // trivial-certified | unknown

    bool certified() const {
      return source_status == "nontrivial-certified" && image_status == "trivial-certified";
    }
    bool operator==(const WitnessRecord&) const = default;
  };

  enum class Verdict { pass, fail, inconclusive };
  const char* to_string(Verdict v);
  Verdict     verdict_from_string(const std::string& s);
  int         exit_code(Verdict v);

  struct VerificationReport {
    std::string                        subject;
    int                                k     = 0;
    int                                L     = 0;
    int                                lox_L = 0;
    std::optional<std::pair<int, int>> n;
    std::vector<Hypothesis>            hypotheses;
    std::vector<ClassResult>           classes;
    std::optional<WitnessRecord>       witness;
    Verdict                            verdict         = Verdict::inconclusive;
    double                             runtime_seconds = 0;
    std::string                        version         = version_string;

    bool operator==(const VerificationReport&) const = default;
  };

  // PASS iff no failing class, no unknown class, no failed hypothesis and,
  // when a witness is recorded, a certified one.
  Verdict decide(const VerificationReport& r);

  // Classifies images of words: exactly for exact reps, otherwise on double
  // boxes with one escalation to binary128 boxes.
  class CertifiedRep {
   public:
    explicit CertifiedRep(ExactRep rep);
    CertifiedRep(const WideRep& rep, long double inflate);
    CertifiedRep(const NumRep& rep, double inflate);

    const Alphabet& alphabet() const { return fast_.alphabet(); }
    bool            exact() const { return exact_.has_value(); }
    IsometryClass   classify(const Word& w) const;

   private:
    std::optional<ExactRep> exact_;
    BoxRep<double>          fast_;
    BoxRep<__float128>      fine_;
  };

  enum class Backend { automatic, free, fig8_exact, retraction, loxodromy };
  const char* to_string(Backend b);
  Backend     backend_from_string(const std::string& s);

  std::vector<Hypothesis> check_sequence_hypotheses(const std::vector<MarkedMap>& maps,
                                                    const VerifyConfig&           cfg);
  VerificationReport      verify_sequence(const std::vector<MarkedMap>& maps,
                                          const VerifyConfig&           cfg);

  // rep is required for the loxodromy backend and must be over the target
  // alphabet.
  VerificationReport verify_non_pinching(const MarkedMap& m, const VerifyConfig& cfg,
                                         Backend backend = Backend::automatic,
                                         const CertifiedRep* rep = nullptr);

  // Witness nontrivial in the source, image trivial in the target.
  WitnessRecord      witness_record(const MarkedMap& m, const Word& w);
  VerificationReport verify_noninjective(const MarkedMap& m);

  struct LoxodromySubject {
    std::string       description;
    GroupPresentation group;  // kind free, figure-eight or extension
    // For extensions: H -> G sending the stable letter to a^n. Classes it
    // kills are excluded, since the representation factors through it.
    std::optional<FreeHom> collapse;
  };
  VerificationReport verify_all_loxodromic(const LoxodromySubject& s, const CertifiedRep& rep,
                                           const VerifyConfig& cfg);

  // Cyclic classes of length 1..max_len up to inversion, least forms, sorted
  // by (length, word).
  std::vector<Word> enumerate_cyclic_classes(std::size_t rank, int max_len);

  struct CompositeOptions {
    cplx                meridian_trace = {2.2, 0.1};
    std::array<cplx, 2> bend           = {cplx(1.3, 0.7), cplx(0.8, -0.5)};
    cplx                vertex_bend    = {1.1, 0.6};
    // 0 keeps the exact figure-eight seed; otherwise its entries are
    // perturbed by a generator seeded with this value.
    std::uint64_t seed = 0;
  };
  // Figure-eight representation with loxodromic meridian of the given
  // trace, refined to binary128 and doubled along the edge words of f_n:
  // a representation of G_n over the target alphabet of double_presentation(n).
  WideRep composite_rep(int n, const CompositeOptions& opt = {});

  std::string        report_json(const VerificationReport& r);
  VerificationReport parse_report(const std::string& text);
  void               emit_report(const VerificationReport& r, const std::string& path);

}  // namespace slw

#endif  // SLW_VERIFY_HPP_
