#ifndef RLW_MORPHISM_HPP_
#define RLW_MORPHISM_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "congruence.hpp"

namespace rlw {

  struct Morphism {
    Algebra           source;
    Algebra           target;
    std::vector<Elem> map;

    Elem operator()(Elem x) const {
      return map[x];
    }
    bool is_injective() const;
    bool is_surjective() const;
    std::vector<Elem> image() const;  // sorted
  };

  // Preserves every operation, the unit and every constant designated in
  // both algebras.
  bool is_homomorphism(Algebra const& B, Algebra const& D, std::vector<Elem> const& map);
  // Throws NotAnEmbedding unless phi is an injective homomorphism.
  void require_embedding(Morphism const& phi);

  Morphism identity_morphism(Algebra const& A);
  // psi after phi
  Morphism compose(Morphism const& psi, Morphism const& phi);
  Morphism inclusion(Algebra const& A, std::vector<Elem> const& S);  // A restricted to S into A
  Morphism projection(Algebra const& A, Congruence const& theta);

  struct HomOptions {
    bool injective = false;
    // Only maps psi with psi(phi(a)) = chi(a) for every a: phi: X -> B and
    // chi: X -> D given as element maps.
    std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> commute_with;
  };

  // Calls fn on each homomorphism B -> D in lexicographic order of maps;
  // stops when fn returns false. Throws SignatureMismatch.
  void for_each_hom(Algebra const&                                  B,
                    Algebra const&                                  D,
                    HomOptions const&                               options,
                    std::function<bool(std::vector<Elem> const&)> const& fn);

  std::vector<Morphism>   homs(Algebra const& B, Algebra const& D, HomOptions const& options = {});
  std::optional<Morphism> first_hom(Algebra const& B, Algebra const& D, HomOptions const& options = {});
  std::optional<Morphism> are_isomorphic(Algebra const& A, Algebra const& B);

  struct EssentialReport {
    bool                      essential = true;
    std::optional<Congruence> witness;  // a non-identity congruence separating the image
  };

  // Checked on the atoms of Con of the target.
  EssentialReport is_essential(Morphism const& phi);

  struct Essentialization {
    Congruence theta;     // on the target of phi
    Morphism   embedding;  // projection after phi, essential
  };

  // A maximal congruence of the target that is the identity on the image.
  Essentialization essentialize(Morphism const& phi);

}  // namespace rlw

#endif  // RLW_MORPHISM_HPP_
