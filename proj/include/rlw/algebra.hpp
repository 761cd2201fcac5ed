#ifndef RLW_ALGEBRA_HPP_
#define RLW_ALGEBRA_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace rlw {

  using Elem = int;

  enum class Constant { f, bot, top };

  // Which of the optional constants f, bot, top are part of the language.
  struct Signature {
    bool f   = false;
    bool bot = false;
    bool top = false;

    bool        operator==(Signature const&) const = default;
    std::string str() const;
  };

  struct Constants {
    std::optional<Elem> f;
    std::optional<Elem> bot;
    std::optional<Elem> top;

    bool      operator==(Constants const&) const = default;
    Signature signature() const {
      return {f.has_value(), bot.has_value(), top.has_value()};
    }
  };

  // Square table of elements, row = left argument.
  class Table {
   public:
    Table() = default;
    explicit Table(int n, Elem fill = 0) : _n(n), _data(static_cast<size_t>(n) * n, fill) {}

    int size() const noexcept {
      return _n;
    }
    Elem operator()(Elem x, Elem y) const {
      return _data[static_cast<size_t>(x) * _n + y];
    }
    Elem& operator()(Elem x, Elem y) {
      return _data[static_cast<size_t>(x) * _n + y];
    }
    std::vector<Elem> const& data() const noexcept {
      return _data;
    }
    bool operator==(Table const&) const = default;
    auto operator<=>(Table const& that) const {
      return _data <=> that._data;
    }

   private:
    int               _n = 0;
    std::vector<Elem> _data;
  };

  // A partial order on {0, ..., n-1}. A chain is always the index order.
  class Order {
   public:
    Order() = default;
    static Order chain(int n);
    static Order from_matrix(int n, std::vector<std::uint8_t> leq);

    int size() const noexcept {
      return _n;
    }
    bool is_chain() const noexcept {
      return _chain;
    }
    bool leq(Elem x, Elem y) const {
      return _leq[static_cast<size_t>(x) * _n + y] != 0;
    }
    std::vector<std::uint8_t> const& matrix() const noexcept {
      return _leq;
    }
    bool operator==(Order const&) const = default;

   private:
    int                       _n     = 0;
    bool                      _chain = true;
    std::vector<std::uint8_t> _leq;
  };

  // Meet and join tables of a lattice order; throws NotALattice otherwise.
  std::pair<Table, Table> lattice_operations(Order const& order);

  enum class Operation { mul, meet, join, ldiv, rdiv };

  inline constexpr Operation all_operations[] = {
      Operation::mul, Operation::meet, Operation::join, Operation::ldiv, Operation::rdiv};

  // A finite residuated lattice, optionally expanded by f, bot and top.
  // Construction validates every axiom; instances are immutable and cheap to
  // copy.
  class Algebra {
   public:
    // the one-element algebra in the plain signature
    Algebra();
    Algebra(std::string name, Order order, Elem unit, Table mult, Constants constants = {});

    std::string const& name() const;
    int                size() const;
    Order const&       order() const;
    bool               is_chain() const;
    Elem               unit() const;
    Constants const&   constants() const;
    Signature          signature() const;
    bool               is_commutative() const;

    Elem bottom() const;
    Elem top() const;

    bool leq(Elem x, Elem y) const {
      return _d->order.leq(x, y);
    }
    bool lt(Elem x, Elem y) const {
      return x != y && _d->order.leq(x, y);
    }
    Elem mult(Elem x, Elem y) const {
      return _d->mult(x, y);
    }
    Elem meet(Elem x, Elem y) const {
      return _d->meet(x, y);
    }
    Elem join(Elem x, Elem y) const {
      return _d->join(x, y);
    }
    // x\z, the largest y with x*y <= z
    Elem ldiv(Elem x, Elem z) const {
      return _d->ldiv(x, z);
    }
    // z/y, the largest x with x*y <= z
    Elem rdiv(Elem z, Elem y) const {
      return _d->rdiv(z, y);
    }
    Elem op(Operation o, Elem x, Elem y) const;

    Table const& mult_table() const;
    Table const& table(Operation o) const;

    // throws MissingConstant when c is not designated
    Elem                constant(Constant c) const;
    std::optional<Elem> find_constant(Constant c) const;

    // the unit together with every designated constant, sorted, no repeats
    std::vector<Elem> designated() const;

    Algebra renamed(std::string name) const;

    // Structural equality; the name is ignored.
    bool same_structure(Algebra const& that) const;

   private:
    struct Data {
      std::string name;
      int         n;
      Order       order;
      Elem        unit;
      Table       mult, meet, join, ldiv, rdiv;
      Constants   constants;
      bool        commutative;
      Elem        bottom, top;
    };
    std::shared_ptr<Data const> _d;
  };

  // When the order is total, the isomorphic copy whose index order is the
  // order; otherwise nothing.
  std::optional<Algebra> chain_copy(Algebra const& A);

  // Assumes n is small; element codes are positions 0..n-1.
  std::vector<Elem> all_elements(Algebra const& A);

}  // namespace rlw

#endif  // RLW_ALGEBRA_HPP_
