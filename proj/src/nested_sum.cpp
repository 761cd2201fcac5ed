#include "rlw/nested_sum.hpp"

#include <algorithm>

#include "rlw/congruence.hpp"
#include "rlw/properties.hpp"
#include "rlw/term.hpp"

namespace rlw {

  namespace {
    std::optional<Elem>& slot(Constants& c, Constant k) {
      return k == Constant::f ? c.f : k == Constant::bot ? c.bot : c.top;
    }

    std::optional<Elem> get(Constants const& c, Constant k) {
      return k == Constant::f ? c.f : k == Constant::bot ? c.bot : c.top;
    }

    constexpr Constant all_constants[] = {Constant::f, Constant::bot, Constant::top};

    // Subalgebra of the plain reduct on S, with the given constants mapped.
    Algebra component_on(Algebra const& plain, std::vector<Elem> const& S, Constants const& full, std::string name) {
      Algebra   sub = subalgebra(plain, S);
      Constants c;
      for (Constant k : all_constants) {
        auto v = get(full, k);
        if (!v) {
          continue;
        }
        auto it = std::find(S.begin(), S.end(), *v);
        if (*v == plain.unit() || it != S.end()) {
          slot(c, k) = static_cast<Elem>(it - S.begin());
        }
      }
      return Algebra(std::move(name), sub.order(), sub.unit(), sub.mult_table(), c);
    }

    bool is_closed(Algebra const& A, std::vector<char> const& in) {
      for (Elem x = 0; x < A.size(); ++x) {
        for (Elem y = 0; y < A.size(); ++y) {
          if (!in[x] || !in[y]) {
            continue;
          }
          for (Operation o : {Operation::mul, Operation::ldiv, Operation::rdiv}) {
            if (!in[A.op(o, x, y)]) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  Algebra plain_reduct(Algebra const& A) {
    return Algebra(A.name(), A.order(), A.unit(), A.mult_table());
  }

  NestedSumLayout nested_sum_layout(std::vector<Algebra> const& components) {
    if (components.empty()) {
      throw Error(ErrorKind::BadParameter, "nested sum of no components");
    }
    int k = static_cast<int>(components.size());
    for (int i = 0; i < k; ++i) {
      if (!components[i].is_chain()) {
        throw Error(ErrorKind::NotAChain, components[i].name() + " is not a chain", {i});
      }
    }
    for (int i = 0; i + 1 < k; ++i) {
      Algebra const& A = components[i];
      Elem           e = A.unit();
      bool inner_integral = std::all_of(components.begin() + i + 1, components.end(),
                                        [](Algebra const& B) { return is_integral(B); });
      for (Elem a = 0; a < e; ++a) {
        if ((A.ldiv(a, e) == e || A.rdiv(e, a) == e) && !inner_integral) {
          throw Error(ErrorKind::NotAdmissible,
                      "component " + std::to_string(i) + " (" + A.name() + ") is not admissible at element "
                          + std::to_string(a),
                      {i, a});
        }
      }
    }

    std::vector<std::vector<Elem>> prov(k);
    std::vector<int>               owner;
    std::vector<Elem>              local;
    for (int i = 0; i < k; ++i) {
      prov[i].assign(components[i].size(), -1);
      for (Elem x = 0; x < components[i].unit(); ++x) {
        prov[i][x] = static_cast<Elem>(owner.size());
        owner.push_back(i);
        local.push_back(x);
      }
    }
    Elem e = static_cast<Elem>(owner.size());
    owner.push_back(-1);
    local.push_back(-1);
    for (int i = k - 1; i >= 0; --i) {
      Algebra const& A = components[i];
      prov[i][A.unit()] = e;
      for (Elem x = A.unit() + 1; x < A.size(); ++x) {
        prov[i][x] = static_cast<Elem>(owner.size());
        owner.push_back(i);
        local.push_back(x);
      }
    }
    int   n = static_cast<int>(owner.size());
    Table t(n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        int i = owner[x], j = owner[y];
        if (i < 0 || j < 0) {
          t(x, y) = i < 0 ? y : x;
        } else if (i == j) {
          t(x, y) = prov[i][components[i].mult(local[x], local[y])];
        } else {
          // the element of the outer component absorbs
          t(x, y) = i < j ? x : y;
        }
      }
    }

    Constants c;
    for (Constant kc : all_constants) {
      int away = -1;
      for (int i = 0; i < k; ++i) {
        auto v = components[i].find_constant(kc);
        if (!v) {
          continue;
        }
        if (*v == components[i].unit()) {
          if (!slot(c, kc)) {
            slot(c, kc) = e;
          }
          continue;
        }
        if (away >= 0) {
          throw Error(ErrorKind::SignatureMismatch,
                      "constant designated away from e in two components", {away, i});
        }
        away          = i;
        slot(c, kc) = prov[i][*v];
      }
    }

    std::string name;
    for (auto const& A : components) {
      name += (name.empty() ? "" : " + ") + A.name();
    }
    Algebra sum;
    try {
      sum = Algebra(name, Order::chain(n), e, t, c);
    } catch (Error const& err) {
      throw Error(ErrorKind::NotAdmissible, "nested sum is not a residuated lattice: " + std::string(err.what()),
                  err.witness());
    }

    // the residuals must follow the component rules
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        int i = owner[x], j = owner[y];
        if (i < 0 || j < 0) {
          continue;
        }
        Algebra const& A = components[std::min(i, j)];
        Elem           lx = i <= j ? local[x] : A.unit();
        Elem           ly = j <= i ? local[y] : A.unit();
        auto const&    p  = prov[std::min(i, j)];
        if (sum.ldiv(x, y) != p[A.ldiv(lx, ly)] || sum.rdiv(x, y) != p[A.rdiv(lx, ly)]) {
          int bad = i <= j ? i : j;
          throw Error(ErrorKind::NotAdmissible,
                      "component " + std::to_string(bad) + " (" + components[bad].name()
                          + ") is not admissible in this position",
                      {bad, bad == i ? local[x] : local[y]});
        }
      }
    }
    return NestedSumLayout{sum, prov};
  }

  Algebra nested_sum(std::vector<Algebra> const& components) {
    return nested_sum_layout(components).sum;
  }

  std::vector<Algebra> factor_nested_sum(Algebra const& A) {
    if (!A.is_chain()) {
      throw Error(ErrorKind::NotAChain, A.name() + " is not a chain");
    }
    Algebra              plain = plain_reduct(A);
    Elem                 e     = A.unit();
    int                  n     = A.size();
    std::vector<Algebra> out;
    int                  lo = 0, hi = n - 1;  // the part still to split
    while (true) {
      bool split = false;
      // largest proper inner interval [l, u] around e first
      for (int width = hi - lo; width >= 2 && !split; --width) {
        for (int l = std::max(lo, e - width + 1); l <= e && !split; ++l) {
          int u = l + width - 1;
          if (u < e || u > hi) {
            continue;
          }
          std::vector<char> inner(n, 0), outer(n, 0);
          for (Elem x = lo; x <= hi; ++x) {
            (x >= l && x <= u ? inner : outer)[x] = 1;
          }
          outer[e] = 1;
          if (!is_closed(plain, inner) || !is_closed(plain, outer)) {
            continue;
          }
          bool ok = true;
          for (Elem x = lo; x <= hi && ok; ++x) {
            if (inner[x]) {
              continue;
            }
            for (Elem y = l; y <= u && ok; ++y) {
              ok = plain.mult(x, y) == x && plain.mult(y, x) == x && plain.ldiv(x, y) == plain.ldiv(x, e)
                   && plain.ldiv(y, x) == x && plain.rdiv(x, y) == x && plain.rdiv(y, x) == plain.rdiv(e, x);
            }
          }
          if (!ok) {
            continue;
          }
          std::vector<Elem> layer;
          for (Elem x = lo; x <= hi; ++x) {
            if (outer[x]) {
              layer.push_back(x);
            }
          }
          out.push_back(component_on(plain, layer, A.constants(), A.name() + "#" + std::to_string(out.size())));
          lo    = l;
          hi    = u;
          split = true;
        }
      }
      if (!split) {
        break;
      }
    }
    std::vector<Elem> rest;
    for (Elem x = lo; x <= hi; ++x) {
      rest.push_back(x);
    }
    std::string name = out.empty() ? A.name() : A.name() + "#" + std::to_string(out.size());
    out.push_back(component_on(plain, rest, A.constants(), name));
    return out;
  }

  bool lower_involutive(Algebra const& A) {
    return check_identity(A, "x^lr^lr = x").holds;
  }

}  // namespace rlw
