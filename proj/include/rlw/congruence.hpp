#ifndef RLW_CONGRUENCE_HPP_
#define RLW_CONGRUENCE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace rlw {

  // An equivalence relation on {0, ..., n-1}. Blocks are numbered by their
  // least element, so equal partitions have equal block vectors.
  class Congruence {
   public:
    Congruence() = default;
    explicit Congruence(std::vector<int> block_of);

    static Congruence identity(int n);
    static Congruence total(int n);
    static Congruence from_blocks(int n, std::vector<std::vector<Elem>> const& blocks);

    int size() const noexcept {
      return static_cast<int>(_block.size());
    }
    int block_count() const noexcept {
      return _count;
    }
    int block(Elem x) const {
      return _block[x];
    }
    bool related(Elem x, Elem y) const {
      return _block[x] == _block[y];
    }
    bool is_identity() const noexcept {
      return _count == size();
    }
    bool is_total() const noexcept {
      return _count <= 1;
    }
    std::vector<int> const& block_vector() const noexcept {
      return _block;
    }
    std::vector<std::vector<Elem>> blocks() const;
    std::vector<Elem>              class_of(Elem x) const;

    // this is contained in that
    bool refines(Congruence const& that) const;
    // Restriction to the elements of S, coded by position in S.
    Congruence restrict_to(std::vector<Elem> const& S) const;

    std::string str() const;

    bool operator==(Congruence const&) const = default;
    auto operator<=>(Congruence const&) const = default;

   private:
    std::vector<int> _block;
    int              _count = 0;
  };

  Congruence meet(Congruence const& a, Congruence const& b);
  Congruence join(Congruence const& a, Congruence const& b);

  // Least congruence containing every given pair.
  Congruence congruence_generated(Algebra const& A, std::vector<std::pair<Elem, Elem>> const& pairs);
  Congruence principal_congruence(Algebra const& A, Elem a, Elem b);

  // Every congruence: identity first, then by decreasing number of blocks
  // (ties by block vector), total last.
  std::vector<Congruence> congruences(Algebra const& A);

  // Indices into `lattice` of the atoms, and of the monolith when Con A minus
  // the identity has a least element.
  std::vector<std::size_t>   congruence_atoms(std::vector<Congruence> const& lattice);
  std::optional<std::size_t> monolith(std::vector<Congruence> const& lattice);

  bool is_congruence(Algebra const& A, Congruence const& theta);

  // Convex normal subalgebras as e-classes, in the order of congruences().
  std::vector<std::vector<Elem>> convex_normal_subalgebras(Algebra const& A);
  // Least convex normal subalgebra containing S.
  std::vector<Elem> cns_generated(Algebra const& A, std::vector<Elem> const& S);

  Algebra quotient(Algebra const& A, Congruence const& theta);

  // Least subuniverse containing S together with e and the designated
  // constants.
  std::vector<Elem> subuniverse_generated(Algebra const& A, std::vector<Elem> const& S);
  bool              is_subuniverse(Algebra const& A, std::vector<Elem> const& S);
  // Every subuniverse, sorted by (size, elements).
  std::vector<std::vector<Elem>> subuniverses(Algebra const& A);
  // Elements keep their relative index order; throws NotASubuniverse.
  Algebra subalgebra(Algebra const& A, std::vector<Elem> const& S);

  struct Classification {
    bool                      fsi             = false;
    bool                      si              = false;
    bool                      simple          = false;
    bool                      strictly_simple = false;
    std::optional<Congruence> monolith;
  };

  Classification classify(Algebra const& A);

  struct CepReport {
    bool              holds = true;
    std::vector<Elem> subuniverse;  // B, as elements of A
    Congruence        theta;        // on B, coded by position in B
    // a pair of elements of A generating theta in B, when theta is principal
    std::optional<std::pair<Elem, Elem>> generator;
    Congruence                           extension;  // least congruence of A containing theta
  };

  // Minimal failing (B, theta) by (|B|, B, theta order) when CEP fails.
  CepReport has_cep(Algebra const& A);

}  // namespace rlw

#endif  // RLW_CONGRUENCE_HPP_
