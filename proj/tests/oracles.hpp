#ifndef RLW_TESTS_ORACLES_HPP_
#define RLW_TESTS_ORACLES_HPP_

// Brute-force reference implementations. They read only the operation
// tables and the order of an algebra and share no code with the library's
// algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "rlw/algebra.hpp"

namespace oracle {

  using rlw::Algebra;
  using rlw::Elem;
  using Partition = std::vector<int>;  // block number of each element, blocks numbered by first occurrence

  inline Elem apply(Algebra const& A, int op, Elem x, Elem y) {
    switch (op) {
      case 0: return A.mult(x, y);
      case 1: return A.meet(x, y);
      case 2: return A.join(x, y);
      case 3: return A.ldiv(x, y);
      default: return A.rdiv(x, y);
    }
  }

  // Restricted growth strings.
  inline void for_each_partition(int n, std::function<void(Partition const&)> const& fn) {
    Partition p(n, 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
      if (i == n) {
        fn(p);
        return;
      }
      for (int b = 0; b <= blocks && b < n; ++b) {
        p[i] = b;
        rec(i + 1, std::max(blocks, b + 1));
      }
    };
    if (n == 0) {
      fn(p);
      return;
    }
    rec(0, 0);
  }

  inline bool compatible(Algebra const& A, Partition const& p) {
    int n = A.size();
    for (int op = 0; op < 5; ++op) {
      for (Elem x = 0; x < n; ++x) {
        for (Elem x2 = 0; x2 < n; ++x2) {
          if (p[x] != p[x2]) {
            continue;
          }
          for (Elem y = 0; y < n; ++y) {
            for (Elem y2 = 0; y2 < n; ++y2) {
              if (p[y] == p[y2] && p[apply(A, op, x, y)] != p[apply(A, op, x2, y2)]) {
                return false;
              }
            }
          }
        }
      }
    }
    return true;
  }

  inline std::vector<Partition> congruences(Algebra const& A) {
    std::vector<Partition> out;
    for_each_partition(A.size(), [&](Partition const& p) {
      if (compatible(A, p)) {
        out.push_back(p);
      }
    });
    return out;
  }

  inline bool refines(Partition const& a, Partition const& b) {
    for (size_t x = 0; x < a.size(); ++x) {
      for (size_t y = 0; y < a.size(); ++y) {
        if (a[x] == a[y] && b[x] != b[y]) {
          return false;
        }
      }
    }
    return true;
  }

  inline int block_count(Partition const& p) {
    return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
  }

  // Least congruence relating a and b: the meet of all that do.
  inline Partition principal(Algebra const& A, Elem a, Elem b) {
    std::optional<Partition> best;
    for (auto const& p : congruences(A)) {
      if (p[a] == p[b] && (!best || refines(p, *best))) {
        best = p;
      }
    }
    return *best;
  }

  inline bool is_identity(Partition const& p) {
    return block_count(p) == static_cast<int>(p.size());
  }

  inline Partition meet(Partition const& a, Partition const& b) {
    int       n = static_cast<int>(a.size());
    Partition out(n, -1);
    int       next = 0;
    for (int x = 0; x < n; ++x) {
      if (out[x] >= 0) {
        continue;
      }
      for (int y = x; y < n; ++y) {
        if (a[x] == a[y] && b[x] == b[y]) {
          out[y] = next;
        }
      }
      ++next;
    }
    return out;
  }

  // Delta is meet-irreducible.
  inline bool fsi(Algebra const& A) {
    auto cons = congruences(A);
    for (auto const& p : cons) {
      for (auto const& q : cons) {
        if (!is_identity(p) && !is_identity(q) && is_identity(meet(p, q))) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::vector<Elem> designated(Algebra const& A) {
    std::vector<Elem> d{A.unit()};
    for (auto c : {rlw::Constant::f, rlw::Constant::bot, rlw::Constant::top}) {
      if (auto v = A.find_constant(c)) {
        d.push_back(*v);
      }
    }
    return d;
  }

  inline bool closed(Algebra const& A, std::vector<char> const& in) {
    for (Elem d : designated(A)) {
      if (!in[d]) {
        return false;
      }
    }
    for (int op = 0; op < 5; ++op) {
      for (Elem x = 0; x < A.size(); ++x) {
        for (Elem y = 0; y < A.size(); ++y) {
          if (in[x] && in[y] && !in[apply(A, op, x, y)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every subuniverse as a sorted element list, sorted by (size, elements).
  inline std::vector<std::vector<Elem>> subuniverses(Algebra const& A) {
    int                            n = A.size();
    std::vector<std::vector<Elem>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<char> in(n);
      for (int x = 0; x < n; ++x) {
        in[x] = (mask >> x) & 1;
      }
      if (closed(A, in)) {
        std::vector<Elem> s;
        for (int x = 0; x < n; ++x) {
          if (in[x]) {
            s.push_back(x);
          }
        }
        out.push_back(s);
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  // Convex normal subalgebras straight from the definition: convex, closed
  // under the operations, contain e, and closed under the conjugates
  // (a\xa) /\ e and (ax/a) /\ e.
  inline std::vector<std::vector<Elem>> convex_normal_subalgebras(Algebra const& A) {
    int                            n = A.size();
    std::vector<std::vector<Elem>> out;
    Elem                           e = A.unit();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto in = [&](Elem x) { return ((mask >> x) & 1) != 0; };
      if (!in(e)) {
        continue;
      }
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        for (Elem y = 0; y < n && ok; ++y) {
          if (!in(x) || !in(y)) {
            continue;
          }
          for (int op = 0; op < 5 && ok; ++op) {
            ok = in(apply(A, op, x, y));
          }
          for (Elem z = 0; z < n && ok; ++z) {
            if (A.leq(x, z) && A.leq(z, y)) {
              ok = in(z);
            }
          }
        }
        for (Elem a = 0; a < n && ok && in(x); ++a) {
          ok = in(A.meet(A.ldiv(a, A.mult(x, a)), e)) && in(A.meet(A.rdiv(A.mult(a, x), a), e));
        }
      }
      if (ok) {
        std::vector<Elem> s;
        for (Elem x = 0; x < n; ++x) {
          if (in(x)) {
            s.push_back(x);
          }
        }
        out.push_back(s);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline std::vector<Elem> e_class(Algebra const& A, Partition const& p) {
    std::vector<Elem> s;
    for (Elem x = 0; x < A.size(); ++x) {
      if (p[x] == p[A.unit()]) {
        s.push_back(x);
      }
    }
    return s;
  }

  // x*y <= z iff y <= x\z iff x <= z/y, and the lattice operations are the
  // order's bounds.
  inline bool residuated(Algebra const& A) {
    int n = A.size();
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          bool p = A.leq(A.mult(x, y), z);
          if (p != A.leq(y, A.ldiv(x, z)) || p != A.leq(x, A.rdiv(z, y))) {
            return false;
          }
          bool lower = A.leq(z, x) && A.leq(z, y), upper = A.leq(x, z) && A.leq(y, z);
          if (lower != A.leq(z, A.meet(x, y)) || upper != A.leq(A.join(x, y), z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool preserves(Algebra const& B, Algebra const& D, std::vector<Elem> const& h) {
    if (h[B.unit()] != D.unit()) {
      return false;
    }
    for (auto c : {rlw::Constant::f, rlw::Constant::bot, rlw::Constant::top}) {
      auto b = B.find_constant(c), d = D.find_constant(c);
      if (b && d && h[*b] != *d) {
        return false;
      }
    }
    for (int op = 0; op < 5; ++op) {
      for (Elem x = 0; x < B.size(); ++x) {
        for (Elem y = 0; y < B.size(); ++y) {
          if (h[apply(B, op, x, y)] != apply(D, op, h[x], h[y])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every homomorphism, in lexicographic order of maps.
  inline std::vector<std::vector<Elem>> homs(Algebra const& B, Algebra const& D, bool injective) {
    std::vector<std::vector<Elem>> out;
    std::vector<Elem>              h(B.size(), 0);
    std::function<void(int)>       rec = [&](int i) {
      if (i == B.size()) {
        if (preserves(B, D, h)) {
          out.push_back(h);
        }
        return;
      }
      for (Elem v = 0; v < D.size(); ++v) {
        if (injective && std::find(h.begin(), h.begin() + i, v) != h.begin() + i) {
          continue;
        }
        h[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    return out;
  }

  inline bool isomorphic(Algebra const& A, Algebra const& B) {
    return A.size() == B.size() && A.signature() == B.signature() && !homs(A, B, true).empty();
  }

  inline Partition restrict(Partition const& p, std::vector<Elem> const& S) {
    Partition r(S.size());
    for (size_t i = 0; i < S.size(); ++i) {
      r[i] = p[S[i]];
    }
    // renumber by first occurrence
    std::vector<int> map(p.size() + 1, -1);
    int              next = 0;
    for (auto& b : r) {
      if (map[b] < 0) {
        map[b] = next++;
      }
      b = map[b];
    }
    return r;
  }

  // The subalgebra on S built directly from the tables.
  inline Algebra sub(Algebra const& A, std::vector<Elem> const& S) {
    int                       k = static_cast<int>(S.size());
    auto                      pos = [&](Elem x) { return static_cast<Elem>(std::find(S.begin(), S.end(), x) - S.begin()); };
    std::vector<std::uint8_t> leq(static_cast<size_t>(k) * k);
    rlw::Table                t(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        leq[static_cast<size_t>(i) * k + j] = A.leq(S[i], S[j]);
        t(i, j)                             = pos(A.mult(S[i], S[j]));
      }
    }
    rlw::Constants c;
    if (auto v = A.find_constant(rlw::Constant::f)) c.f = pos(*v);
    if (auto v = A.find_constant(rlw::Constant::bot)) c.bot = pos(*v);
    if (auto v = A.find_constant(rlw::Constant::top)) c.top = pos(*v);
    return Algebra("sub", rlw::Order::from_matrix(k, leq), pos(A.unit()), t, c);
  }

  // A/p built from block representatives; [x] <= [y] iff x /\ y ~ x.
  inline Algebra quotient(Algebra const& A, Partition const& p) {
    int               k = block_count(p);
    std::vector<Elem> rep(k, -1);
    for (Elem x = 0; x < A.size(); ++x) {
      if (rep[p[x]] < 0) {
        rep[p[x]] = x;
      }
    }
    std::vector<std::uint8_t> leq(static_cast<size_t>(k) * k);
    rlw::Table                t(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        leq[static_cast<size_t>(i) * k + j] = p[A.meet(rep[i], rep[j])] == i;
        t(i, j)                             = p[A.mult(rep[i], rep[j])];
      }
    }
    rlw::Constants c;
    if (auto v = A.find_constant(rlw::Constant::f)) c.f = p[*v];
    if (auto v = A.find_constant(rlw::Constant::bot)) c.bot = p[*v];
    if (auto v = A.find_constant(rlw::Constant::top)) c.top = p[*v];
    return Algebra("quot", rlw::Order::from_matrix(k, leq), p[A.unit()], t, c);
  }

  // Every congruence of every subalgebra is the restriction of one of A.
  inline bool cep(Algebra const& A) {
    auto big = congruences(A);
    for (auto const& S : subuniverses(A)) {
      for (auto const& theta : congruences(sub(A, S))) {
        bool extends = std::any_of(big.begin(), big.end(), [&](Partition const& p) { return restrict(p, S) == theta; });
        if (!extends) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace oracle

#endif  // RLW_TESTS_ORACLES_HPP_
