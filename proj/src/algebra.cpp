#include "rlw/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace rlw {

  namespace {
    std::string show(std::vector<int> const& w) {
      std::string s = "(";
      for (size_t i = 0; i < w.size(); ++i) {
        s += (i ? "," : "") + std::to_string(w[i]);
      }
      return s + ")";
    }

    // Largest element of {y : pred(y)} if that set is nonempty and closed
    // under joins and downward closed; otherwise -1.
    template <typename Pred>
    Elem residual(int n, Order const& order, Table const& join, Pred&& pred) {
      Elem best  = -1;
      for (Elem y = 0; y < n; ++y) {
        if (pred(y)) {
          best = best < 0 ? y : join(best, y);
        }
      }
      if (best < 0 || !pred(best)) {
        return -1;
      }
      for (Elem y = 0; y < n; ++y) {
        if (order.leq(y, best) && !pred(y)) {
          return -1;
        }
      }
      return best;
    }
  }  // namespace

  std::string Signature::str() const {
    std::string s;
    for (auto [on, name] : {std::pair{f, "f"}, {bot, "bot"}, {top, "top"}}) {
      if (on) {
        s += s.empty() ? "" : ",";
        s += name;
      }
    }
    return s.empty() ? "plain" : s;
  }

  Order Order::chain(int n) {
    Order o;
    o._n     = n;
    o._chain = true;
    o._leq.assign(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) {
      for (int y = x; y < n; ++y) {
        o._leq[static_cast<size_t>(x) * n + y] = 1;
      }
    }
    return o;
  }

  Order Order::from_matrix(int n, std::vector<std::uint8_t> leq) {
    if (leq.size() != static_cast<size_t>(n) * n) {
      throw Error(ErrorKind::ParseError, "order matrix has wrong dimensions");
    }
    for (auto& v : leq) {
      if (v > 1) {
        throw Error(ErrorKind::ParseError, "order matrix entries must be 0 or 1");
      }
    }
    Order o;
    o._n   = n;
    o._leq = std::move(leq);
    o._chain = (o == chain(n));
    return o;
  }

  std::pair<Table, Table> lattice_operations(Order const& order) {
    int const n = order.size();
    for (Elem x = 0; x < n; ++x) {
      if (!order.leq(x, x)) {
        throw Error(ErrorKind::NotALattice, "order is not reflexive at " + std::to_string(x), {x});
      }
      for (Elem y = 0; y < n; ++y) {
        if (x != y && order.leq(x, y) && order.leq(y, x)) {
          throw Error(ErrorKind::NotALattice, "order is not antisymmetric " + show({x, y}), {x, y});
        }
        for (Elem z = 0; z < n; ++z) {
          if (order.leq(x, y) && order.leq(y, z) && !order.leq(x, z)) {
            throw Error(
                ErrorKind::NotALattice, "order is not transitive " + show({x, y, z}), {x, y, z});
          }
        }
      }
    }
    Table meet(n), join(n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem lo = -1, hi = -1;
        for (Elem z = 0; z < n; ++z) {
          if (order.leq(z, x) && order.leq(z, y)) {
            bool greatest = true;
            for (Elem w = 0; w < n && greatest; ++w) {
              if (order.leq(w, x) && order.leq(w, y) && !order.leq(w, z)) {
                greatest = false;
              }
            }
            if (greatest) {
              lo = z;
            }
          }
          if (order.leq(x, z) && order.leq(y, z)) {
            bool least = true;
            for (Elem w = 0; w < n && least; ++w) {
              if (order.leq(x, w) && order.leq(y, w) && !order.leq(z, w)) {
                least = false;
              }
            }
            if (least) {
              hi = z;
            }
          }
        }
        if (lo < 0 || hi < 0) {
          throw Error(ErrorKind::NotALattice, "no meet or join for " + show({x, y}), {x, y});
        }
        meet(x, y) = lo;
        join(x, y) = hi;
      }
    }
    return {std::move(meet), std::move(join)};
  }

  Algebra::Algebra() : Algebra("trivial", Order::chain(1), 0, Table(1, 0)) {}

  Algebra::Algebra(std::string name, Order order, Elem unit, Table mult, Constants constants) {
    int const n = order.size();
    if (n < 1) {
      throw Error(ErrorKind::ParseError, "an algebra needs at least one element");
    }
    if (mult.size() != n) {
      throw Error(ErrorKind::ParseError, "multiplication table has wrong dimensions");
    }
    if (unit < 0 || unit >= n) {
      throw Error(ErrorKind::ParseError, "unit out of range");
    }
    for (Elem v : mult.data()) {
      if (v < 0 || v >= n) {
        throw Error(ErrorKind::ParseError, "multiplication entry out of range");
      }
    }

    auto [meet, join] = lattice_operations(order);

    // monoid axioms
    for (Elem x = 0; x < n; ++x) {
      if (mult(unit, x) != x || mult(x, unit) != x) {
        throw Error(ErrorKind::NotAMonoid, "unit law fails at " + std::to_string(x), {x});
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem xy = mult(x, y);
        for (Elem z = 0; z < n; ++z) {
          if (mult(xy, z) != mult(x, mult(y, z))) {
            throw Error(
                ErrorKind::NotAMonoid, "associativity fails at " + show({x, y, z}), {x, y, z});
          }
        }
      }
    }

    // residuals, computed constructively
    Table ldiv(n), rdiv(n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem z = 0; z < n; ++z) {
        Elem r = residual(n, order, join, [&](Elem y) { return order.leq(mult(x, y), z); });
        if (r < 0) {
          throw Error(ErrorKind::NotResiduated, "no left residual " + show({x, z}), {x, z});
        }
        ldiv(x, z) = r;
      }
    }
    for (Elem z = 0; z < n; ++z) {
      for (Elem y = 0; y < n; ++y) {
        Elem r = residual(n, order, join, [&](Elem w) { return order.leq(mult(w, y), z); });
        if (r < 0) {
          throw Error(ErrorKind::NotResiduated, "no right residual " + show({z, y}), {z, y});
        }
        rdiv(z, y) = r;
      }
    }

    Elem bottom = 0, top = 0;
    for (Elem x = 0; x < n; ++x) {
      bottom = meet(bottom, x);
      top    = join(top, x);
    }
    if (constants.f && (*constants.f < 0 || *constants.f >= n)) {
      throw Error(ErrorKind::BadConstant, "f out of range", {*constants.f});
    }
    if (constants.bot && *constants.bot != bottom) {
      throw Error(ErrorKind::BadConstant, "bot is not the least element", {*constants.bot});
    }
    if (constants.top && *constants.top != top) {
      throw Error(ErrorKind::BadConstant, "top is not the greatest element", {*constants.top});
    }

    bool commutative = true;
    for (Elem x = 0; x < n && commutative; ++x) {
      for (Elem y = 0; y < x && commutative; ++y) {
        commutative = mult(x, y) == mult(y, x);
      }
    }

    _d = std::make_shared<Data const>(Data{std::move(name),
                                           n,
                                           std::move(order),
                                           unit,
                                           std::move(mult),
                                           std::move(meet),
                                           std::move(join),
                                           std::move(ldiv),
                                           std::move(rdiv),
                                           constants,
                                           commutative,
                                           bottom,
                                           top});
  }

  std::string const& Algebra::name() const {
    return _d->name;
  }
  int Algebra::size() const {
    return _d->n;
  }
  Order const& Algebra::order() const {
    return _d->order;
  }
  bool Algebra::is_chain() const {
    return _d->order.is_chain();
  }
  Elem Algebra::unit() const {
    return _d->unit;
  }
  Constants const& Algebra::constants() const {
    return _d->constants;
  }
  Signature Algebra::signature() const {
    return _d->constants.signature();
  }
  bool Algebra::is_commutative() const {
    return _d->commutative;
  }
  Elem Algebra::bottom() const {
    return _d->bottom;
  }
  Elem Algebra::top() const {
    return _d->top;
  }
  Table const& Algebra::mult_table() const {
    return _d->mult;
  }

  Table const& Algebra::table(Operation o) const {
    switch (o) {
      case Operation::mul: return _d->mult;
      case Operation::meet: return _d->meet;
      case Operation::join: return _d->join;
      case Operation::ldiv: return _d->ldiv;
      case Operation::rdiv: return _d->rdiv;
    }
    return _d->mult;
  }

  Elem Algebra::op(Operation o, Elem x, Elem y) const {
    return table(o)(x, y);
  }

  std::optional<Elem> Algebra::find_constant(Constant c) const {
    switch (c) {
      case Constant::f: return _d->constants.f;
      case Constant::bot: return _d->constants.bot;
      case Constant::top: return _d->constants.top;
    }
    return std::nullopt;
  }

  Elem Algebra::constant(Constant c) const {
    auto v = find_constant(c);
    if (!v) {
      static char const* names[] = {"f", "bot", "top"};
      throw Error(ErrorKind::MissingConstant,
                  std::string(names[static_cast<int>(c)]) + " is not designated in " + name());
    }
    return *v;
  }

  std::vector<Elem> Algebra::designated() const {
    std::vector<Elem> out{unit()};
    for (auto c : {constants().f, constants().bot, constants().top}) {
      if (c) {
        out.push_back(*c);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Algebra Algebra::renamed(std::string name) const {
    Algebra copy = *this;
    auto    d    = std::make_shared<Data>(*_d);
    d->name      = std::move(name);
    copy._d      = std::move(d);
    return copy;
  }

  bool Algebra::same_structure(Algebra const& that) const {
    return _d->order == that._d->order && _d->unit == that._d->unit
           && _d->mult == that._d->mult && _d->constants == that._d->constants;
  }

  std::vector<Elem> all_elements(Algebra const& A) {
    std::vector<Elem> v(A.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  std::optional<Algebra> chain_copy(Algebra const& A) {
    if (A.is_chain()) {
      return A;
    }
    int               n = A.size();
    std::vector<Elem> rank(n, 0);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (!A.leq(x, y) && !A.leq(y, x)) {
          return std::nullopt;
        }
        rank[x] += (y != x && A.leq(y, x));
      }
    }
    Table t(n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        t(rank[x], rank[y]) = rank[A.mult(x, y)];
      }
    }
    auto map = [&](std::optional<Elem> v) -> std::optional<Elem> {
      return v ? std::optional<Elem>(rank[*v]) : std::nullopt;
    };
    Constants c{map(A.constants().f), map(A.constants().bot), map(A.constants().top)};
    return Algebra(A.name(), Order::chain(n), rank[A.unit()], t, c);
  }

}  // namespace rlw
