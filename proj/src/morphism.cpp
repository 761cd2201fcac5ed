#include "rlw/morphism.hpp"

#include <algorithm>

namespace rlw {

  namespace {
    class HomSearch {
     public:
      HomSearch(Algebra const& B, Algebra const& D, bool injective)
          : _B(B), _D(D), _injective(injective), _h(B.size(), -1), _used(D.size(), 0) {}

      bool assign(Elem x, Elem v) {
        std::vector<Elem> queue{x};
        if (!set(x, v)) {
          return false;
        }
        for (size_t q = 0; q < queue.size(); ++q) {
          Elem a = queue[q];
          for (size_t i = 0; i < _assigned.size(); ++i) {
            Elem b = _assigned[i];
            for (Operation o : all_operations) {
              for (int side = 0; side < 2; ++side) {
                Elem l = side ? b : a, r = side ? a : b;
                Elem z = _B.op(o, l, r);
                Elem w = _D.op(o, _h[l], _h[r]);
                if (_h[z] < 0) {
                  if (!set(z, w)) {
                    return false;
                  }
                  queue.push_back(z);
                } else if (_h[z] != w) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      size_t mark() const {
        return _assigned.size();
      }
      void undo(size_t m) {
        while (_assigned.size() > m) {
          Elem x = _assigned.back();
          _assigned.pop_back();
          --_used[_h[x]];
          _h[x] = -1;
        }
      }

      bool run(std::function<bool(std::vector<Elem> const&)> const& fn) {
        auto it = std::find(_h.begin(), _h.end(), -1);
        if (it == _h.end()) {
          return fn(_h);
        }
        Elem x = static_cast<Elem>(it - _h.begin());
        for (Elem v = 0; v < _D.size(); ++v) {
          size_t m = mark();
          if (assign(x, v) && !run(fn)) {
            return false;
          }
          undo(m);
        }
        return true;
      }

     private:
      bool set(Elem x, Elem v) {
        if (_h[x] >= 0) {
          return _h[x] == v;
        }
        if (_injective && _used[v]) {
          return false;
        }
        _h[x] = v;
        ++_used[v];
        _assigned.push_back(x);
        return true;
      }

      Algebra const&    _B;
      Algebra const&    _D;
      bool              _injective;
      std::vector<Elem> _h;
      std::vector<int>  _used;
      std::vector<Elem> _assigned;
    };
  }  // namespace

  bool Morphism::is_injective() const {
    auto img = image();
    return img.size() == map.size();
  }

  bool Morphism::is_surjective() const {
    return static_cast<int>(image().size()) == target.size();
  }

  std::vector<Elem> Morphism::image() const {
    std::vector<Elem> img = map;
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
  }

  bool is_homomorphism(Algebra const& B, Algebra const& D, std::vector<Elem> const& map) {
    if (static_cast<int>(map.size()) != B.size()) {
      return false;
    }
    for (Elem v : map) {
      if (v < 0 || v >= D.size()) {
        return false;
      }
    }
    if (map[B.unit()] != D.unit()) {
      return false;
    }
    for (Constant c : {Constant::f, Constant::bot, Constant::top}) {
      auto b = B.find_constant(c), d = D.find_constant(c);
      if (b && d && map[*b] != *d) {
        return false;
      }
    }
    for (Operation o : all_operations) {
      for (Elem x = 0; x < B.size(); ++x) {
        for (Elem y = 0; y < B.size(); ++y) {
          if (map[B.op(o, x, y)] != D.op(o, map[x], map[y])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void require_embedding(Morphism const& phi) {
    if (!is_homomorphism(phi.source, phi.target, phi.map)) {
      throw Error(ErrorKind::NotAnEmbedding, "not a homomorphism " + phi.source.name() + " -> " + phi.target.name());
    }
    if (!phi.is_injective()) {
      throw Error(ErrorKind::NotAnEmbedding, "not injective " + phi.source.name() + " -> " + phi.target.name());
    }
  }

  Morphism identity_morphism(Algebra const& A) {
    Morphism m{A, A, all_elements(A)};
    return m;
  }

  Morphism compose(Morphism const& psi, Morphism const& phi) {
    std::vector<Elem> map(phi.map.size());
    for (size_t i = 0; i < map.size(); ++i) {
      map[i] = psi.map[phi.map[i]];
    }
    return Morphism{phi.source, psi.target, std::move(map)};
  }

  Morphism inclusion(Algebra const& A, std::vector<Elem> const& S) {
    std::vector<Elem> elems = S;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return Morphism{subalgebra(A, elems), A, elems};
  }

  Morphism projection(Algebra const& A, Congruence const& theta) {
    return Morphism{A, quotient(A, theta), theta.block_vector()};
  }

  void for_each_hom(Algebra const&                                       B,
                    Algebra const&                                       D,
                    HomOptions const&                                    options,
                    std::function<bool(std::vector<Elem> const&)> const& fn) {
    if (B.signature() != D.signature()) {
      throw Error(ErrorKind::SignatureMismatch,
                  B.name() + " has signature " + B.signature().str() + ", " + D.name() + " has "
                      + D.signature().str());
    }
    if (options.injective && B.size() > D.size()) {
      return;
    }
    HomSearch s(B, D, options.injective);
    if (!s.assign(B.unit(), D.unit())) {
      return;
    }
    for (Constant c : {Constant::f, Constant::bot, Constant::top}) {
      auto b = B.find_constant(c), d = D.find_constant(c);
      if (b && d && !s.assign(*b, *d)) {
        return;
      }
    }
    if (options.commute_with) {
      auto const& [phi, chi] = *options.commute_with;
      for (size_t a = 0; a < phi.size(); ++a) {
        if (!s.assign(phi[a], chi[a])) {
          return;
        }
      }
    }
    s.run(fn);
  }

  std::vector<Morphism> homs(Algebra const& B, Algebra const& D, HomOptions const& options) {
    std::vector<Morphism> out;
    for_each_hom(B, D, options, [&](std::vector<Elem> const& h) {
      out.push_back(Morphism{B, D, h});
      return true;
    });
    return out;
  }

  std::optional<Morphism> first_hom(Algebra const& B, Algebra const& D, HomOptions const& options) {
    std::optional<Morphism> out;
    for_each_hom(B, D, options, [&](std::vector<Elem> const& h) {
      out = Morphism{B, D, h};
      return false;
    });
    return out;
  }

  std::optional<Morphism> are_isomorphic(Algebra const& A, Algebra const& B) {
    if (A.size() != B.size() || A.signature() != B.signature()) {
      return std::nullopt;
    }
    HomOptions opt;
    opt.injective = true;
    return first_hom(A, B, opt);
  }

  EssentialReport is_essential(Morphism const& phi) {
    require_embedding(phi);
    EssentialReport r;
    auto            con = congruences(phi.target);
    for (auto i : congruence_atoms(con)) {
      if (con[i].restrict_to(phi.map).is_identity()) {
        r.essential = false;
        r.witness   = con[i];
        return r;
      }
    }
    return r;
  }

  Essentialization essentialize(Morphism const& phi) {
    require_embedding(phi);
    auto con = congruences(phi.target);
    // the list runs from most to fewest blocks, so the first hit from the
    // end is maximal among those that are the identity on the image
    for (auto it = con.rbegin(); it != con.rend(); ++it) {
      if (it->restrict_to(phi.map).is_identity()) {
        Morphism pi = projection(phi.target, *it);
        return Essentialization{*it, compose(pi, phi)};
      }
    }
    // unreachable: the identity always qualifies
    return Essentialization{con.front(), phi};
  }

}  // namespace rlw
