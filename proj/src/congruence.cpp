#include "rlw/congruence.hpp"

#include <algorithm>
#include <numeric>

namespace rlw {

  namespace {
    struct UnionFind {
      std::vector<int> parent;

      explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      int find(int x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (x > y) {
          std::swap(x, y);
        }
        parent[y] = x;
        return true;
      }
      Congruence congruence() {
        std::vector<int> b(parent.size());
        for (size_t i = 0; i < parent.size(); ++i) {
          b[i] = find(static_cast<int>(i));
        }
        return Congruence(std::move(b));
      }
    };

    // Merges the pairs and closes under all basic translations.
    Congruence close(Algebra const& A, UnionFind& uf, std::vector<std::pair<Elem, Elem>> work) {
      int n = A.size();
      while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        for (Operation o : all_operations) {
          Table const& t = A.table(o);
          for (Elem c = 0; c < n; ++c) {
            if (uf.unite(t(x, c), t(y, c))) {
              work.emplace_back(t(x, c), t(y, c));
            }
            if (uf.unite(t(c, x), t(c, y))) {
              work.emplace_back(t(c, x), t(c, y));
            }
          }
        }
      }
      return uf.congruence();
    }

    bool canonical_order(Congruence const& a, Congruence const& b) {
      if (a.block_count() != b.block_count()) {
        return a.block_count() > b.block_count();
      }
      return a.block_vector() < b.block_vector();
    }
  }  // namespace

  Congruence::Congruence(std::vector<int> block_of) : _block(std::move(block_of)) {
    std::vector<int> rename(_block.size(), -1);
    _count = 0;
    for (auto& b : _block) {
      if (rename[b] < 0) {
        rename[b] = _count++;
      }
      b = rename[b];
    }
  }

  Congruence Congruence::identity(int n) {
    std::vector<int> b(n);
    std::iota(b.begin(), b.end(), 0);
    return Congruence(std::move(b));
  }

  Congruence Congruence::total(int n) {
    return Congruence(std::vector<int>(n, 0));
  }

  Congruence Congruence::from_blocks(int n, std::vector<std::vector<Elem>> const& blocks) {
    std::vector<int> b(n, -1);
    for (size_t i = 0; i < blocks.size(); ++i) {
      for (Elem x : blocks[i]) {
        if (x < 0 || x >= n || b[x] >= 0) {
          throw Error(ErrorKind::BadParameter, "blocks do not form a partition", {x});
        }
        b[x] = static_cast<int>(i);
      }
    }
    if (std::find(b.begin(), b.end(), -1) != b.end()) {
      throw Error(ErrorKind::BadParameter, "blocks do not cover the carrier");
    }
    return Congruence(std::move(b));
  }

  std::vector<std::vector<Elem>> Congruence::blocks() const {
    std::vector<std::vector<Elem>> out(_count);
    for (Elem x = 0; x < size(); ++x) {
      out[_block[x]].push_back(x);
    }
    return out;
  }

  std::vector<Elem> Congruence::class_of(Elem x) const {
    std::vector<Elem> out;
    for (Elem y = 0; y < size(); ++y) {
      if (_block[y] == _block[x]) {
        out.push_back(y);
      }
    }
    return out;
  }

  bool Congruence::refines(Congruence const& that) const {
    std::vector<int> image(_count, -1);
    for (Elem x = 0; x < size(); ++x) {
      int& i = image[_block[x]];
      if (i < 0) {
        i = that._block[x];
      } else if (i != that._block[x]) {
        return false;
      }
    }
    return true;
  }

  Congruence Congruence::restrict_to(std::vector<Elem> const& S) const {
    std::vector<int> b;
    b.reserve(S.size());
    for (Elem x : S) {
      b.push_back(_block[x]);
    }
    // renumber into 0..|S|-1 so the constructor's lookup table fits
    std::vector<int> first(size(), -1);
    for (size_t i = 0; i < b.size(); ++i) {
      if (first[b[i]] < 0) {
        first[b[i]] = static_cast<int>(i);
      }
      b[i] = first[b[i]];
    }
    return Congruence(std::move(b));
  }

  std::string Congruence::str() const {
    std::string s;
    for (auto const& blk : blocks()) {
      s += "{";
      for (size_t i = 0; i < blk.size(); ++i) {
        s += (i ? "," : "") + std::to_string(blk[i]);
      }
      s += "}";
    }
    return s;
  }

  Congruence meet(Congruence const& a, Congruence const& b) {
    int              n = a.size();
    std::vector<int> key(n);
    for (Elem x = 0; x < n; ++x) {
      key[x] = a.block(x) * n + b.block(x);
    }
    std::vector<int> first(static_cast<size_t>(n) * n, -1);
    for (Elem x = 0; x < n; ++x) {
      if (first[key[x]] < 0) {
        first[key[x]] = x;
      }
      key[x] = first[key[x]];
    }
    return Congruence(std::move(key));
  }

  Congruence join(Congruence const& a, Congruence const& b) {
    UnionFind uf(a.size());
    for (auto const& blk : a.blocks()) {
      for (Elem x : blk) {
        uf.unite(blk.front(), x);
      }
    }
    for (auto const& blk : b.blocks()) {
      for (Elem x : blk) {
        uf.unite(blk.front(), x);
      }
    }
    return uf.congruence();
  }

  Congruence congruence_generated(Algebra const& A, std::vector<std::pair<Elem, Elem>> const& pairs) {
    UnionFind                          uf(A.size());
    std::vector<std::pair<Elem, Elem>> work;
    for (auto [x, y] : pairs) {
      if (uf.unite(x, y)) {
        work.emplace_back(x, y);
      }
    }
    return close(A, uf, std::move(work));
  }

  Congruence principal_congruence(Algebra const& A, Elem a, Elem b) {
    return congruence_generated(A, {{a, b}});
  }

  std::vector<Congruence> congruences(Algebra const& A) {
    int                     n = A.size();
    std::vector<Congruence> all{Congruence::identity(n)};
    auto                    add = [&](Congruence const& c) {
      if (std::find(all.begin(), all.end(), c) == all.end()) {
        all.push_back(c);
        return true;
      }
      return false;
    };
    std::vector<Congruence> principals;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) {
        Congruence c = principal_congruence(A, x, y);
        if (add(c)) {
          principals.push_back(c);
        }
      }
    }
    // every congruence of a finite algebra is a join of principal ones
    for (size_t i = 1; i < all.size(); ++i) {
      for (auto const& p : principals) {
        add(join(all[i], p));
      }
    }
    std::sort(all.begin(), all.end(), canonical_order);
    return all;
  }

  std::vector<std::size_t> congruence_atoms(std::vector<Congruence> const& lattice) {
    std::vector<std::size_t> atoms;
    for (size_t i = 0; i < lattice.size(); ++i) {
      if (lattice[i].is_identity()) {
        continue;
      }
      bool atom = true;
      for (size_t j = 0; j < lattice.size() && atom; ++j) {
        if (j != i && !lattice[j].is_identity() && lattice[j].refines(lattice[i])) {
          atom = false;
        }
      }
      if (atom) {
        atoms.push_back(i);
      }
    }
    return atoms;
  }

  std::optional<std::size_t> monolith(std::vector<Congruence> const& lattice) {
    auto atoms = congruence_atoms(lattice);
    if (atoms.size() != 1) {
      return std::nullopt;
    }
    return atoms.front();
  }

  bool is_congruence(Algebra const& A, Congruence const& theta) {
    int n = A.size();
    for (Operation o : all_operations) {
      Table const& t = A.table(o);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (!theta.related(x, y)) {
            continue;
          }
          for (Elem c = 0; c < n; ++c) {
            if (!theta.related(t(x, c), t(y, c)) || !theta.related(t(c, x), t(c, y))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  std::vector<std::vector<Elem>> convex_normal_subalgebras(Algebra const& A) {
    std::vector<std::vector<Elem>> out;
    for (auto const& c : congruences(A)) {
      out.push_back(c.class_of(A.unit()));
    }
    return out;
  }

  std::vector<Elem> cns_generated(Algebra const& A, std::vector<Elem> const& S) {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem s : S) {
      pairs.emplace_back(s, A.unit());
    }
    return congruence_generated(A, pairs).class_of(A.unit());
  }

  Algebra quotient(Algebra const& A, Congruence const& theta) {
    if (theta.size() != A.size() || !is_congruence(A, theta)) {
      throw Error(ErrorKind::BadParameter, "not a congruence of " + A.name());
    }
    int               k    = theta.block_count();
    auto              blks = theta.blocks();
    Table             t(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        t(i, j) = theta.block(A.mult(blks[i].front(), blks[j].front()));
      }
    }
    Order order;
    if (A.is_chain()) {
      // blocks of a chain are intervals, numbered bottom-up
      order = Order::chain(k);
    } else {
      std::vector<std::uint8_t> m(static_cast<size_t>(k) * k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          Elem x = blks[i].front(), y = blks[j].front();
          m[static_cast<size_t>(i) * k + j] = theta.related(A.meet(x, y), x);
        }
      }
      order = Order::from_matrix(k, std::move(m));
    }
    Constants c;
    auto      map = [&](std::optional<Elem> v) -> std::optional<Elem> {
      if (v) {
        return theta.block(*v);
      }
      return std::nullopt;
    };
    c.f   = map(A.constants().f);
    c.bot = map(A.constants().bot);
    c.top = map(A.constants().top);
    return Algebra(A.name() + "/" + theta.str(), order, theta.block(A.unit()), t, c);
  }

  std::vector<Elem> subuniverse_generated(Algebra const& A, std::vector<Elem> const& S) {
    int               n = A.size();
    std::vector<char> in(n, 0);
    std::vector<Elem> members;
    auto              add = [&](Elem x) {
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    };
    for (Elem x : A.designated()) {
      add(x);
    }
    for (Elem x : S) {
      add(x);
    }
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = 0; j <= i; ++j) {
        Elem x = members[i], y = members[j];
        for (Operation o : all_operations) {
          add(A.op(o, x, y));
          add(A.op(o, y, x));
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  bool is_subuniverse(Algebra const& A, std::vector<Elem> const& S) {
    std::vector<Elem> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return subuniverse_generated(A, sorted) == sorted;
  }

  std::vector<std::vector<Elem>> subuniverses(Algebra const& A) {
    std::vector<std::vector<Elem>> found{subuniverse_generated(A, {})};
    for (size_t i = 0; i < found.size(); ++i) {
      for (Elem x = 0; x < A.size(); ++x) {
        if (std::binary_search(found[i].begin(), found[i].end(), x)) {
          continue;
        }
        auto seed = found[i];
        seed.push_back(x);
        auto S = subuniverse_generated(A, seed);
        if (std::find(found.begin(), found.end(), S) == found.end()) {
          found.push_back(std::move(S));
        }
      }
    }
    std::sort(found.begin(), found.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return found;
  }

  Algebra subalgebra(Algebra const& A, std::vector<Elem> const& S) {
    std::vector<Elem> elems = S;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!is_subuniverse(A, elems)) {
      throw Error(ErrorKind::NotASubuniverse, "not closed under the operations of " + A.name(), elems);
    }
    int              k = static_cast<int>(elems.size());
    std::vector<int> pos(A.size(), -1);
    for (int i = 0; i < k; ++i) {
      pos[elems[i]] = i;
    }
    Table t(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        t(i, j) = pos[A.mult(elems[i], elems[j])];
      }
    }
    Order order;
    if (A.is_chain()) {
      order = Order::chain(k);
    } else {
      std::vector<std::uint8_t> m(static_cast<size_t>(k) * k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          m[static_cast<size_t>(i) * k + j] = A.leq(elems[i], elems[j]);
        }
      }
      order = Order::from_matrix(k, std::move(m));
    }
    Constants c;
    auto      map = [&](std::optional<Elem> v) -> std::optional<Elem> {
      if (v) {
        return pos[*v];
      }
      return std::nullopt;
    };
    c.f   = map(A.constants().f);
    c.bot = map(A.constants().bot);
    c.top = map(A.constants().top);
    std::string name = A.name() + "[";
    for (int i = 0; i < k; ++i) {
      name += (i ? "," : "") + std::to_string(elems[i]);
    }
    return Algebra(name + "]", order, pos[A.unit()], t, c);
  }

  Classification classify(Algebra const& A) {
    Classification r;
    auto           con = congruences(A);
    r.fsi              = true;
    for (size_t i = 1; i < con.size() && r.fsi; ++i) {
      for (size_t j = i + 1; j < con.size(); ++j) {
        if (meet(con[i], con[j]).is_identity()) {
          r.fsi = false;
          break;
        }
      }
    }
    if (auto m = monolith(con)) {
      r.si       = true;
      r.monolith = con[*m];
    }
    r.simple = con.size() == 2;
    if (r.simple) {
      bool f_apart    = A.constants().f && *A.constants().f != A.unit();
      r.strictly_simple = !f_apart;
      for (auto const& S : subuniverses(A)) {
        if (static_cast<int>(S.size()) != A.size() && S.size() != 1) {
          r.strictly_simple = false;
        }
      }
    }
    return r;
  }

  CepReport has_cep(Algebra const& A) {
    CepReport r;
    for (auto const& B : subuniverses(A)) {
      if (static_cast<int>(B.size()) == A.size() || B.size() <= 2) {
        // two-element subalgebras only have the identity and total relation
        continue;
      }
      Algebra sub = subalgebra(A, B);
      for (auto const& theta : congruences(sub)) {
        std::vector<std::pair<Elem, Elem>> pairs;
        for (auto const& blk : theta.blocks()) {
          for (Elem x : blk) {
            pairs.emplace_back(B[blk.front()], B[x]);
          }
        }
        Congruence phi = congruence_generated(A, pairs);
        if (phi.restrict_to(B) == theta) {
          continue;
        }
        r.holds       = false;
        r.subuniverse = B;
        r.theta       = theta;
        r.extension   = phi;
        for (Elem x = 0; x < sub.size() && !r.generator; ++x) {
          for (Elem y = x + 1; y < sub.size(); ++y) {
            if (principal_congruence(sub, x, y) == theta) {
              r.generator = std::pair{B[x], B[y]};
              break;
            }
          }
        }
        return r;
      }
    }
    return r;
  }

}  // namespace rlw
