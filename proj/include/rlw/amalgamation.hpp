#ifndef RLW_AMALGAMATION_HPP_
#define RLW_AMALGAMATION_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "congruence.hpp"
#include "io.hpp"
#include "morphism.hpp"
#include "properties.hpp"

namespace rlw {

  // A pair of embeddings phi1: A -> B, phi2: A -> C.
  struct Span {
    Algebra           A, B, C;
    std::vector<Elem> phi1, phi2;

    Morphism first() const {
      return Morphism{A, B, phi1};
    }
    Morphism second() const {
      return Morphism{A, C, phi2};
    }
  };

  // Checks both maps are embeddings; throws SignatureMismatch or
  // NotAnEmbedding.
  Span make_span(Algebra A, Algebra B, Algebra C, std::vector<Elem> phi1, std::vector<Elem> phi2);
  Span identity_span(Algebra const& A);

  inline constexpr std::string_view span_format = "rlw-span/1";

  // Algebra references are file paths relative to the span file, or catalog
  // addresses.
  Span load_span(std::filesystem::path const& path);
  json span_to_json(Span const& s, std::string const& a_ref, std::string const& b_ref, std::string const& c_ref);

  // Either an explicit list of algebras or every chain of size at most
  // `bound` in a signature that passes a filter.
  struct ClassSpec {
    bool                 bounded = false;
    std::vector<Algebra> members;
    int                  bound = 0;
    Signature            signature;
    ProfileFilter        filter;

    static ClassSpec list(std::vector<Algebra> members);
    static ClassSpec chains_up_to(int bound, Signature signature, ProfileFilter filter = {});
    std::string      str() const;
  };

  enum class Verdict { found, not_found_exhaustive, refuted, unknown };
  std::string_view to_string(Verdict v) noexcept;

  // One identification in a refutation. B and C elements are in their own
  // codings.
  struct RefutationStep {
    enum class Rule { init, r1, r2, r2_mirror } rule;
    Elem b = -1, c = -1;  // merged elements
    // init: a; r2: d in B, d2 in C; r1: (u, v) and (u2, v2) with operation op
    Elem      a = -1, d = -1, d2 = -1, u = -1, v = -1, u2 = -1, v2 = -1;
    Operation op = Operation::mul;

    std::string str() const;
  };

  struct Contradiction {
    // C1: two distinct elements of one side identified (side 'B' or 'C');
    // C2: b1 < b2 in B identified with c1 > c2 in C
    enum class Rule { c1, c2 } rule;
    char side = 'B';
    Elem x = -1, y = -1;            // C1
    Elem b1 = -1, c1 = -1, b2 = -1, c2 = -1;  // C2

    std::string str() const;
  };

  struct AmalgamReport {
    Verdict                      verdict = Verdict::unknown;
    std::optional<Algebra>       D;
    std::vector<Elem>            psi1, psi2;
    std::optional<int>           bound;  // set when the class was bounded
    // for refutations, only the steps the contradiction depends on
    std::vector<RefutationStep>  trace;
    std::size_t                  steps_total = 0;  // steps derived before stopping
    std::optional<Contradiction> contradiction;
    std::uint64_t                candidates = 0;  // targets or placements tried
  };

  // psi1: B -> D injective, psi2: C -> D (injective unless one_sided),
  // psi1 phi1 = psi2 phi2. Explicit classes are searched in list order;
  // bounded classes by size of D, then congruence of C, then placement.
  AmalgamReport find_amalgam(Span const& s, ClassSpec const& K, bool one_sided, int workers = 1);
  // Bounded classes only: enumerate every chain first, then look for maps.
  AmalgamReport find_amalgam_by_enumeration(Span const& s, ClassSpec const& K, bool one_sided, int workers = 1);
  bool verify_amalgam(Span const& s, AmalgamReport const& r, bool one_sided);

  bool is_essential_span(Span const& s);

  // Forced identifications in any totally ordered amalgam. Refuted is a
  // proof that none exists; Unknown means the rules ran dry. Throws
  // NotChains.
  AmalgamReport refute_chain_amalgam(Span const& s, bool mirror_rule = false);
  bool          replay_refutation(Span const& s, AmalgamReport const& r);

  // A span inside an explicit class, by member index; phi1 is the inclusion
  // of `subuniverse` into member b.
  struct ClassSpan {
    std::size_t       b = 0, c = 0;
    std::vector<Elem> subuniverse;
    std::vector<Elem> phi2;
  };

  struct ClassCheck {
    bool                     holds = true;
    std::optional<ClassSpan> witness;
    std::optional<Span>      witness_span;
    std::size_t              spans = 0;
  };

  // Throws NotSubalgebraClosed. The witness is the least failing span by
  // (|B| + |C|, |C|, |A|, b, c, subuniverse, phi2).
  ClassCheck class_has_1ap(std::vector<Algebra> const& K, int workers = 1);
  ClassCheck class_has_eap(std::vector<Algebra> const& K, int workers = 1);

  // Totally ordered members of HS(generators), one per isomorphism type,
  // ordered by (size, table). Throws NotSemilinear.
  std::vector<Algebra> fsi_chains(std::vector<Algebra> const& generators);

  struct ApDecision {
    bool                  ap = true;
    enum class Reason { none, cep_failure, span_failure } reason = Reason::none;
    std::vector<Algebra>  chains;
    std::optional<std::size_t> cep_chain;  // index into chains
    std::optional<CepReport>   cep;
    std::optional<ClassCheck>  check;
    std::optional<ClassCheck>  essential_check;  // cross-check route
    std::optional<bool>        routes_agree;
  };

  ApDecision decide_ap(std::vector<Algebra> const& generators, bool cross_check = false, int workers = 1);

  struct FastPathResult {
    enum class Outcome { ap, not_ap, not_applicable } outcome = Outcome::not_applicable;
    std::string reason;
  };

  // For a finite simple chain: AP iff CEP holds and no two distinct
  // subalgebras are isomorphic. Throws NotSimple, NotAChain.
  FastPathResult simple_chain_ap(Algebra const& A);
  // AP when A is strictly simple, otherwise not applicable.
  FastPathResult strictly_simple_ap(Algebra const& A);

}  // namespace rlw

#endif  // RLW_AMALGAMATION_HPP_
