#include "rlw/amalgamation.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "rlw/catalog.hpp"
#include "rlw/completion.hpp"
#include "rlw/parallel.hpp"
#include "rlw/term.hpp"

namespace rlw {

  namespace {
    std::string show(std::vector<Elem> const& v) {
      std::string s = "[";
      for (size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
      }
      return s + "]";
    }

    char const* op_symbol(Operation o) {
      switch (o) {
        case Operation::mul:
          return "*";
        case Operation::meet:
          return "/\\";
        case Operation::join:
          return "\\/";
        case Operation::ldiv:
          return "\\";
        case Operation::rdiv:
          return "/";
      }
      return "?";
    }

    std::vector<Elem> compose_maps(std::vector<Elem> const& outer, std::vector<Elem> const& inner) {
      std::vector<Elem> out(inner.size());
      for (size_t i = 0; i < inner.size(); ++i) {
        out[i] = outer[inner[i]];
      }
      return out;
    }

    // Looks for psi1, psi2 into a fixed target.
    bool maps_into(Span const& s, Algebra const& D, bool one_sided, AmalgamReport& r) {
      bool found = false;
      for_each_hom(s.B, D, HomOptions{true, std::nullopt}, [&](std::vector<Elem> const& psi1) {
        HomOptions opt;
        opt.injective    = !one_sided;
        opt.commute_with = std::pair{s.phi2, compose_maps(psi1, s.phi1)};
        if (auto psi2 = first_hom(s.C, D, opt)) {
          r.D    = D;
          r.psi1 = psi1;
          r.psi2 = psi2->map;
          found  = true;
          return false;
        }
        return true;
      });
      return found;
    }

    // --- bounded search by placement -------------------------------------

    struct Quotiented {
      Algebra           Cq;
      std::vector<int>  block;  // C element -> Cq element
      std::vector<Elem> phi2q;
    };

    struct Placement {
      std::size_t       theta;
      std::vector<Elem> psi1, psi2q;
    };

    // Strictly increasing maps of {0..m-1} into {0..k-1} honouring pins.
    void increasing_maps(int m, int k, std::vector<Elem> const& pins, std::vector<std::vector<Elem>>& out) {
      std::vector<Elem>      cur(m);
      std::function<void(int, int)> go = [&](int i, int lo) {
        if (i == m) {
          out.push_back(cur);
          return;
        }
        int rest = m - i - 1;
        if (pins[i] >= 0) {
          if (pins[i] >= lo && pins[i] + rest < k) {
            cur[i] = pins[i];
            go(i + 1, pins[i] + 1);
          }
          return;
        }
        for (int v = lo; v + rest < k; ++v) {
          cur[i] = v;
          go(i + 1, v + 1);
        }
      };
      go(0, 0);
    }

    std::optional<PartialAlgebra> seed(Span const& s,
                                       Quotiented const& q,
                                       Placement const& p,
                                       int k,
                                       ClassSpec const& K) {
      using Mask = std::uint32_t;
      Mask              full = k == 32 ? ~Mask(0) : (Mask(1) << k) - 1;
      std::vector<Mask> dom(static_cast<size_t>(k) * k, full);
      auto              cell = [&](Elem x, Elem y) -> Mask& { return dom[static_cast<size_t>(x) * k + y]; };
      auto              le   = [&](Elem v) { return v + 1 >= 32 ? full : ((Mask(1) << (v + 1)) - 1) & full; };
      auto              gt   = [&](Elem v) { return full & ~le(v); };
      auto pin = [&](Algebra const& X, std::vector<Elem> const& psi) {
        int n = X.size();
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            cell(psi[x], psi[y]) &= Mask(1) << psi[X.mult(x, y)];
            // psi(x\y) = psi(x)\psi(y)
            Elem w = psi[X.ldiv(x, y)];
            cell(psi[x], w) &= le(psi[y]);
            if (w + 1 < k) {
              cell(psi[x], w + 1) &= gt(psi[y]);
            }
            // psi(x/y) = psi(x)/psi(y)
            w = psi[X.rdiv(x, y)];
            cell(w, psi[y]) &= le(psi[x]);
            if (w + 1 < k) {
              cell(w + 1, psi[y]) &= gt(psi[x]);
            }
          }
        }
      };
      pin(s.B, p.psi1);
      pin(q.Cq, p.psi2q);
      if (std::find(dom.begin(), dom.end(), Mask(0)) != dom.end()) {
        return std::nullopt;
      }
      PartialAlgebra P;
      P.name        = "D";
      P.order       = Order::chain(k);
      P.unit        = p.psi1[s.B.unit()];
      P.domains     = std::move(dom);
      P.filter      = K.filter;
      P.commutative = K.filter.commutative.value_or(false);
      if (auto f = s.B.find_constant(Constant::f)) {
        P.constants.f = p.psi1[*f];
      }
      if (K.signature.bot) {
        P.constants.bot = 0;
      }
      if (K.signature.top) {
        P.constants.top = k - 1;
      }
      return P;
    }

    AmalgamReport bounded_search(Span const& s, ClassSpec const& K, bool one_sided, int workers) {
      if (!s.B.is_chain() || !s.C.is_chain()) {
        throw Error(ErrorKind::NotChains, "bounded chain classes need chains B and C");
      }
      AmalgamReport r;
      r.bound   = K.bound;
      r.verdict = Verdict::not_found_exhaustive;
      if (K.bound > 32) {
        throw Error(ErrorKind::BadParameter, "bound above 32");
      }

      std::vector<Quotiented> qs;
      if (one_sided) {
        for (auto const& theta : congruences(s.C)) {
          if (!theta.restrict_to(s.phi2).is_identity()) {
            continue;
          }
          Quotiented q{theta.is_identity() ? s.C : quotient(s.C, theta), theta.block_vector(), {}};
          for (Elem a : s.phi2) {
            q.phi2q.push_back(theta.block(a));
          }
          qs.push_back(std::move(q));
        }
      } else {
        qs.push_back(Quotiented{s.C, all_elements(s.C), s.phi2});
      }

      int nb = s.B.size();
      for (int k = nb; k <= K.bound; ++k) {
        std::vector<Placement> places;
        std::vector<Elem>      pins1(nb, -1);
        if (K.signature.bot) {
          pins1[0] = 0;
        }
        if (K.signature.top) {
          pins1[nb - 1] = k - 1;
        }
        std::vector<std::vector<Elem>> first;
        increasing_maps(nb, k, pins1, first);
        for (size_t t = 0; t < qs.size(); ++t) {
          int nq = qs[t].Cq.size();
          if (nq > k) {
            continue;
          }
          for (auto const& psi1 : first) {
            std::vector<Elem> pins2(nq, -1);
            bool              ok = true;
            for (size_t a = 0; a < s.phi1.size() && ok; ++a) {
              Elem& slot = pins2[qs[t].phi2q[a]];
              Elem  want = psi1[s.phi1[a]];
              ok         = slot < 0 || slot == want;
              slot       = want;
            }
            if (K.signature.bot) {
              ok = ok && (pins2[0] < 0 || pins2[0] == 0);
              pins2[0] = 0;
            }
            if (K.signature.top) {
              ok = ok && (pins2[nq - 1] < 0 || pins2[nq - 1] == k - 1);
              pins2[nq - 1] = k - 1;
            }
            if (!ok) {
              continue;
            }
            std::vector<std::vector<Elem>> second;
            increasing_maps(nq, k, pins2, second);
            for (auto& psi2 : second) {
              places.push_back(Placement{t, psi1, std::move(psi2)});
            }
          }
        }
        r.candidates += places.size();
        std::vector<std::optional<Algebra>> hits(places.size());
        auto                                idx = parallel_find_first(places.size(), workers, [&](size_t i) {
          auto P = seed(s, qs[places[i].theta], places[i], k, K);
          if (!P) {
            return false;
          }
          CompletionOptions opt;
          opt.limit = 1;
          auto res  = search_completions(*P, opt);
          if (res.algebras.empty()) {
            return false;
          }
          hits[i] = res.algebras.front();
          return true;
        });
        if (idx < places.size()) {
          Placement const& p = places[idx];
          r.verdict          = Verdict::found;
          r.D                = hits[idx];
          r.psi1             = p.psi1;
          r.psi2.clear();
          for (Elem c = 0; c < s.C.size(); ++c) {
            r.psi2.push_back(p.psi2q[qs[p.theta].block[c]]);
          }
          return r;
        }
      }
      return r;
    }

    // --- refuter ----------------------------------------------------------

    class Refuter {
     public:
      Refuter(Span const& s, bool mirror) : _s(s), _mirror(mirror) {
        int nb = s.B.size(), nc = s.C.size();
        _parent.resize(nb + nc);
        std::iota(_parent.begin(), _parent.end(), 0);
        _bof.assign(nb + nc, -1);
        _cof.assign(nb + nc, -1);
        _adj.resize(nb + nc);
        for (Elem b = 0; b < nb; ++b) {
          _bof[b] = b;
        }
        for (Elem c = 0; c < nc; ++c) {
          _cof[nb + c] = c;
        }
      }

      AmalgamReport run() {
        for (size_t a = 0; a < _s.phi1.size(); ++a) {
          RefutationStep st{RefutationStep::Rule::init, _s.phi1[a], _s.phi2[a]};
          st.a = static_cast<Elem>(a);
          if (merge(st)) {
            return finish();
          }
        }
        bool changed = true;
        while (changed) {
          changed    = false;
          auto pairs = cross_pairs();
          for (auto [d, d2] : pairs) {
            for (Elem u = 0; u < _s.B.size(); ++u) {
              for (Elem v = 0; v < _s.C.size(); ++v) {
                bool fixed  = _s.B.ldiv(u, d) == u && _s.C.ldiv(v, d2) == v;
                bool mfixed = _mirror && _s.B.rdiv(d, u) == u && _s.C.rdiv(d2, v) == v;
                for (auto rule : {RefutationStep::Rule::r2, RefutationStep::Rule::r2_mirror}) {
                  if (rule == RefutationStep::Rule::r2 ? !fixed : !mfixed) {
                    continue;
                  }
                  RefutationStep st{rule, u, v};
                  st.d  = d;
                  st.d2 = d2;
                  if (related(u, v)) {
                    continue;
                  }
                  changed = true;
                  if (merge(st)) {
                    return finish();
                  }
                }
              }
            }
          }
          pairs = cross_pairs();
          for (Operation o : all_operations) {
            for (auto [u, v] : pairs) {
              for (auto [u2, v2] : pairs) {
                Elem b = _s.B.op(o, u, u2), c = _s.C.op(o, v, v2);
                if (related(b, c)) {
                  continue;
                }
                RefutationStep st{RefutationStep::Rule::r1, b, c};
                st.u  = u;
                st.v  = v;
                st.u2 = u2;
                st.v2 = v2;
                st.op = o;
                changed = true;
                if (merge(st)) {
                  return finish();
                }
              }
            }
          }
        }
        return finish();
      }

      // Applies a step without checking its premises; true on contradiction.
      bool merge(RefutationStep const& st) {
        _report.trace.push_back(st);
        int nb = _s.B.size();
        int x = find(st.b), y = find(nb + st.c);
        if (x != y) {
          if (_bof[x] >= 0 && _bof[y] >= 0 && _bof[x] != _bof[y]) {
            _last_edge = {_bof[x], _bof[y]};
            return contradiction_c1('B', _bof[x], _bof[y]);
          }
          if (_cof[x] >= 0 && _cof[y] >= 0 && _cof[x] != _cof[y]) {
            _last_edge = {nb + _cof[x], nb + _cof[y]};
            return contradiction_c1('C', _cof[x], _cof[y]);
          }
          _parent[y] = x;
          _bof[x]    = std::max(_bof[x], _bof[y]);
          _cof[x]    = std::max(_cof[x], _cof[y]);
          add_edge(st.b, nb + st.c);
        }
        auto pairs = cross_pairs();
        for (auto [b1, c1] : pairs) {
          for (auto [b2, c2] : pairs) {
            if (_s.B.lt(b1, b2) && _s.C.lt(c2, c1)) {
              Contradiction k{Contradiction::Rule::c2};
              k.b1 = b1;
              k.c1 = c1;
              k.b2 = b2;
              k.c2 = c2;
              _report.contradiction = k;
              return true;
            }
          }
        }
        return false;
      }

      bool related(Elem b, Elem c) {
        return find(b) == find(_s.B.size() + c);
      }
      bool related_b(Elem b1, Elem b2) {
        return find(b1) == find(b2);
      }

      std::vector<std::pair<Elem, Elem>> cross_pairs() {
        std::vector<std::pair<Elem, Elem>> out;
        for (Elem b = 0; b < _s.B.size(); ++b) {
          int r = find(b);
          if (_cof[r] >= 0) {
            out.emplace_back(b, _cof[r]);
          }
        }
        return out;
      }

      AmalgamReport& report() {
        return _report;
      }

      // Keeps only the steps the contradiction depends on.
      void slice() {
        if (!_report.contradiction) {
          return;
        }
        int                 nb     = _s.B.size();
        auto const&         trace  = _report.trace;
        std::vector<char>   needed(trace.size(), 0);
        std::vector<size_t> work;
        auto explain = [&](int x, int y) {
          for (size_t i : path(x, y)) {
            if (!needed[i]) {
              needed[i] = 1;
              work.push_back(i);
            }
          }
        };
        auto const& k = *_report.contradiction;
        if (k.rule == Contradiction::Rule::c1) {
          size_t last = trace.size() - 1;
          needed[last] = 1;
          work.push_back(last);
          // the two same-side elements reach the final step's endpoints
          int a = _last_edge.first, b = _last_edge.second;
          int p = trace[last].b, q = nb + trace[last].c;
          if (!connected(a, p)) {
            std::swap(p, q);
          }
          explain(a, p);
          explain(q, b);
        } else {
          explain(k.b1, nb + k.c1);
          explain(k.b2, nb + k.c2);
        }
        while (!work.empty()) {
          auto const& st = trace[work.back()];
          work.pop_back();
          switch (st.rule) {
            case RefutationStep::Rule::init:
              break;
            case RefutationStep::Rule::r2:
            case RefutationStep::Rule::r2_mirror:
              explain(st.d, nb + st.d2);
              break;
            case RefutationStep::Rule::r1:
              explain(st.u, nb + st.v);
              explain(st.u2, nb + st.v2);
              break;
          }
        }
        std::vector<RefutationStep> kept;
        for (size_t i = 0; i < trace.size(); ++i) {
          if (needed[i]) {
            kept.push_back(trace[i]);
          }
        }
        _report.steps_total = trace.size();
        _report.trace       = std::move(kept);
      }

     private:
      void add_edge(int x, int y) {
        size_t step = _report.trace.size() - 1;
        _adj[x].emplace_back(y, step);
        _adj[y].emplace_back(x, step);
      }

      bool connected(int x, int y) const {
        return x == y || !path(x, y).empty();
      }

      // Step indices on the forest path from x to y (empty if x == y or
      // unconnected).
      std::vector<size_t> path(int x, int y) const {
        std::vector<std::pair<int, size_t>> from(_adj.size(), {-1, 0});
        std::vector<int>                    queue{x};
        from[x] = {x, 0};
        for (size_t i = 0; i < queue.size(); ++i) {
          for (auto [z, step] : _adj[queue[i]]) {
            if (from[z].first < 0) {
              from[z] = {queue[i], step};
              queue.push_back(z);
            }
          }
        }
        std::vector<size_t> out;
        if (from[y].first < 0) {
          return out;
        }
        for (int z = y; z != x; z = from[z].first) {
          out.push_back(from[z].second);
        }
        return out;
      }

      int find(int x) {
        while (_parent[x] != x) {
          x = _parent[x];
        }
        return x;
      }

      bool contradiction_c1(char side, Elem x, Elem y) {
        Contradiction k{Contradiction::Rule::c1};
        k.side                = side;
        k.x                   = std::min(x, y);
        k.y                   = std::max(x, y);
        _report.contradiction = k;
        return true;
      }

      AmalgamReport finish() {
        _report.verdict = _report.contradiction ? Verdict::refuted : Verdict::unknown;
        if (!_report.contradiction) {
          _report.steps_total = _report.trace.size();
        }
        return _report;
      }

      Span const&                                       _s;
      bool                                              _mirror;
      std::vector<std::vector<std::pair<int, size_t>>> _adj;
      std::pair<int, int>                               _last_edge{-1, -1};
      std::vector<int>  _parent;
      std::vector<Elem> _bof, _cof;
      AmalgamReport     _report;
    };

    bool same_chain(Algebra const& a, Algebra const& b) {
      return a.size() == b.size() && a.same_structure(b);
    }

    bool isomorphic(Algebra const& a, Algebra const& b) {
      if (a.is_chain() && b.is_chain()) {
        // finite chains have no non-trivial order automorphisms
        return same_chain(a, b);
      }
      return are_isomorphic(a, b).has_value();
    }

    ClassCheck class_check(std::vector<Algebra> const& K, bool essential, int workers) {
      for (size_t i = 0; i < K.size(); ++i) {
        for (auto const& S : subuniverses(K[i])) {
          Algebra sub = subalgebra(K[i], S);
          bool    in  = std::any_of(K.begin(), K.end(), [&](Algebra const& X) { return isomorphic(sub, X); });
          if (!in) {
            throw Error(ErrorKind::NotSubalgebraClosed,
                        "the subalgebra " + show(S) + " of " + K[i].name() + " is not in the class",
                        S);
          }
        }
      }
      struct Entry {
        ClassSpan span;
        Algebra   A;
      };
      std::vector<Entry> spans;
      for (size_t bi = 0; bi < K.size(); ++bi) {
        for (auto const& S : subuniverses(K[bi])) {
          Algebra A = subalgebra(K[bi], S);
          for (size_t ci = 0; ci < K.size(); ++ci) {
            if (A.signature() != K[ci].signature()) {
              continue;
            }
            for (auto const& phi2 : homs(A, K[ci], HomOptions{true, std::nullopt})) {
              if (essential && !is_essential(phi2).essential) {
                continue;
              }
              spans.push_back(Entry{ClassSpan{bi, ci, S, phi2.map}, A});
            }
          }
        }
      }
      auto key = [&](Entry const& e) {
        return std::tuple(K[e.span.b].size() + K[e.span.c].size(),
                          K[e.span.c].size(),
                          e.A.size(),
                          e.span.b,
                          e.span.c,
                          e.span.subuniverse,
                          e.span.phi2);
      };
      std::sort(spans.begin(), spans.end(), [&](Entry const& x, Entry const& y) { return key(x) < key(y); });

      ClassSpec  cls = ClassSpec::list(K);
      ClassCheck out;
      out.spans = spans.size();
      auto to_span = [&](Entry const& e) {
        return Span{e.A, K[e.span.b], K[e.span.c], e.span.subuniverse, e.span.phi2};
      };
      size_t bad = parallel_find_first(spans.size(), workers, [&](size_t i) {
        return find_amalgam(to_span(spans[i]), cls, !essential).verdict != Verdict::found;
      });
      if (bad < spans.size()) {
        out.holds        = false;
        out.witness      = spans[bad].span;
        out.witness_span = to_span(spans[bad]);
      }
      return out;
    }
  }  // namespace

  Span make_span(Algebra A, Algebra B, Algebra C, std::vector<Elem> phi1, std::vector<Elem> phi2) {
    if (A.signature() != B.signature() || A.signature() != C.signature()) {
      throw Error(ErrorKind::SignatureMismatch, "span algebras have different signatures");
    }
    Span s{std::move(A), std::move(B), std::move(C), std::move(phi1), std::move(phi2)};
    require_embedding(s.first());
    require_embedding(s.second());
    return s;
  }

  Span identity_span(Algebra const& A) {
    return make_span(A, A, A, all_elements(A), all_elements(A));
  }

  Span load_span(std::filesystem::path const& path) {
    json j;
    try {
      j = json::parse(read_file(path));
    } catch (json::exception const& e) {
      throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
    if (!j.is_object() || detail::member(j, "format") != span_format) {
      throw Error(ErrorKind::ParseError, path.string() + ": not an " + std::string(span_format) + " file");
    }
    auto resolve = [&](char const* key) {
      auto const& v = detail::member(j, key);
      if (!v.is_string()) {
        throw Error(ErrorKind::ParseError, std::string("span field ") + key + " must be a string");
      }
      std::string ref = v.get<std::string>();
      if (ref.rfind("catalog:", 0) == 0) {
        return resolve_catalog(ref);
      }
      std::filesystem::path p = ref;
      if (p.is_relative()) {
        p = path.parent_path() / p;
      }
      return load_algebra(p);
    };
    auto ints = [&](char const* key) {
      std::vector<Elem> out;
      auto const&       v = detail::member(j, key);
      if (!v.is_array()) {
        throw Error(ErrorKind::ParseError, std::string("span field ") + key + " must be an array");
      }
      for (auto const& x : v) {
        out.push_back(detail::as_int(x, key));
      }
      return out;
    };
    Algebra A = resolve("A"), B = resolve("B"), C = resolve("C");
    auto    phi1 = ints("phi1"), phi2 = ints("phi2");
    if (static_cast<int>(phi1.size()) != A.size() || static_cast<int>(phi2.size()) != A.size()) {
      throw Error(ErrorKind::ParseError, "span maps must have one entry per element of A");
    }
    return make_span(A, B, C, phi1, phi2);
  }

  json span_to_json(Span const& s, std::string const& a_ref, std::string const& b_ref, std::string const& c_ref) {
    json j;
    j["format"] = span_format;
    j["A"]      = a_ref;
    j["B"]      = b_ref;
    j["C"]      = c_ref;
    j["phi1"]   = s.phi1;
    j["phi2"]   = s.phi2;
    return j;
  }

  ClassSpec ClassSpec::list(std::vector<Algebra> members) {
    ClassSpec k;
    k.members = std::move(members);
    return k;
  }

  ClassSpec ClassSpec::chains_up_to(int bound, Signature signature, ProfileFilter filter) {
    ClassSpec k;
    k.bounded   = true;
    k.bound     = bound;
    k.signature = signature;
    k.filter    = std::move(filter);
    return k;
  }

  std::string ClassSpec::str() const {
    if (!bounded) {
      std::string s = "list(";
      for (size_t i = 0; i < members.size(); ++i) {
        s += (i ? ", " : "") + members[i].name();
      }
      return s + ")";
    }
    return "chains of size <= " + std::to_string(bound) + " in signature " + signature.str() + ", filter "
           + filter.str();
  }

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::found:
        return "Found";
      case Verdict::not_found_exhaustive:
        return "NotFoundExhaustive";
      case Verdict::refuted:
        return "Refuted";
      case Verdict::unknown:
        return "Unknown";
    }
    return "?";
  }

  std::string RefutationStep::str() const {
    std::string m = "B" + std::to_string(b) + " ~ C" + std::to_string(c);
    switch (rule) {
      case Rule::init:
        return m + " by init (a = " + std::to_string(a) + ")";
      case Rule::r2:
        return m + " by R2 (fixed points of x\\d, d = B" + std::to_string(d) + " ~ C" + std::to_string(d2) + ")";
      case Rule::r2_mirror:
        return m + " by R2' (fixed points of d/x, d = B" + std::to_string(d) + " ~ C" + std::to_string(d2) + ")";
      case Rule::r1:
        return m + " by R1 (B" + std::to_string(u) + " " + op_symbol(op) + " B" + std::to_string(u2) + " ~ C"
               + std::to_string(v) + " " + op_symbol(op) + " C" + std::to_string(v2) + ")";
    }
    return m;
  }

  std::string Contradiction::str() const {
    if (rule == Rule::c1) {
      return std::string("C1: distinct ") + side + std::to_string(x) + " and " + side + std::to_string(y)
             + " identified";
    }
    return "C2: B" + std::to_string(b1) + " < B" + std::to_string(b2) + " but C" + std::to_string(c1) + " > C"
           + std::to_string(c2);
  }

  AmalgamReport find_amalgam(Span const& s, ClassSpec const& K, bool one_sided, int workers) {
    if (K.bounded) {
      if (K.signature != s.B.signature()) {
        throw Error(ErrorKind::SignatureMismatch,
                    "span signature " + s.B.signature().str() + " differs from class signature " + K.signature.str());
      }
      return bounded_search(s, K, one_sided, workers);
    }
    AmalgamReport r;
    r.verdict = Verdict::not_found_exhaustive;
    for (auto const& D : K.members) {
      if (D.signature() != s.B.signature()) {
        throw Error(ErrorKind::SignatureMismatch, D.name() + " has signature " + D.signature().str());
      }
      ++r.candidates;
      if (maps_into(s, D, one_sided, r)) {
        r.verdict = Verdict::found;
        return r;
      }
    }
    return r;
  }

  AmalgamReport find_amalgam_by_enumeration(Span const& s, ClassSpec const& K, bool one_sided, int workers) {
    if (!K.bounded) {
      return find_amalgam(s, K, one_sided, workers);
    }
    if (K.signature != s.B.signature()) {
      throw Error(ErrorKind::SignatureMismatch, "span signature differs from class signature");
    }
    AmalgamReport r;
    r.bound   = K.bound;
    r.verdict = Verdict::not_found_exhaustive;
    for (int k = std::max(1, s.B.size()); k <= K.bound; ++k) {
      auto targets = enumerate_chains(k, K.filter, K.signature, workers);
      r.candidates += targets.size();
      std::vector<AmalgamReport> hits(targets.size());
      size_t                     idx = parallel_find_first(targets.size(), workers, [&](size_t i) {
        return maps_into(s, targets[i], one_sided, hits[i]);
      });
      if (idx < targets.size()) {
        hits[idx].verdict    = Verdict::found;
        hits[idx].bound      = K.bound;
        hits[idx].candidates = r.candidates;
        return hits[idx];
      }
    }
    return r;
  }

  bool verify_amalgam(Span const& s, AmalgamReport const& r, bool one_sided) {
    if (r.verdict != Verdict::found || !r.D) {
      return false;
    }
    Morphism psi1{s.B, *r.D, r.psi1}, psi2{s.C, *r.D, r.psi2};
    if (!is_homomorphism(s.B, *r.D, r.psi1) || !is_homomorphism(s.C, *r.D, r.psi2) || !psi1.is_injective()) {
      return false;
    }
    if (!one_sided && !psi2.is_injective()) {
      return false;
    }
    return compose_maps(r.psi1, s.phi1) == compose_maps(r.psi2, s.phi2);
  }

  bool is_essential_span(Span const& s) {
    return is_essential(s.second()).essential;
  }

  AmalgamReport refute_chain_amalgam(Span const& s, bool mirror_rule) {
    if (!s.B.is_chain() || !s.C.is_chain()) {
      throw Error(ErrorKind::NotChains, "the refuter needs totally ordered B and C");
    }
    Refuter ref(s, mirror_rule);
    ref.run();
    ref.slice();
    ref.report().verdict = ref.report().contradiction ? Verdict::refuted : Verdict::unknown;
    return ref.report();
  }

  bool replay_refutation(Span const& s, AmalgamReport const& r) {
    if (r.verdict != Verdict::refuted || !r.contradiction) {
      return false;
    }
    Refuter ref(s, true);
    for (auto const& st : r.trace) {
      bool ok = false;
      switch (st.rule) {
        case RefutationStep::Rule::init:
          ok = st.a >= 0 && st.a < s.A.size() && s.phi1[st.a] == st.b && s.phi2[st.a] == st.c;
          break;
        case RefutationStep::Rule::r2:
          ok = ref.related(st.d, st.d2) && s.B.ldiv(st.b, st.d) == st.b && s.C.ldiv(st.c, st.d2) == st.c;
          break;
        case RefutationStep::Rule::r2_mirror:
          ok = ref.related(st.d, st.d2) && s.B.rdiv(st.d, st.b) == st.b && s.C.rdiv(st.d2, st.c) == st.c;
          break;
        case RefutationStep::Rule::r1:
          ok = ref.related(st.u, st.v) && ref.related(st.u2, st.v2) && s.B.op(st.op, st.u, st.u2) == st.b
               && s.C.op(st.op, st.v, st.v2) == st.c;
          break;
      }
      if (!ok) {
        return false;
      }
      if (ref.merge(st)) {
        // the contradiction must be the last step and the one reported
        auto const& got  = ref.report().contradiction;
        auto const& want = *r.contradiction;
        return &st == &r.trace.back() && got->rule == want.rule && got->side == want.side && got->x == want.x
               && got->y == want.y && got->b1 == want.b1 && got->b2 == want.b2 && got->c1 == want.c1
               && got->c2 == want.c2;
      }
    }
    return false;
  }

  ClassCheck class_has_1ap(std::vector<Algebra> const& K, int workers) {
    return class_check(K, false, workers);
  }

  ClassCheck class_has_eap(std::vector<Algebra> const& K, int workers) {
    return class_check(K, true, workers);
  }

  std::vector<Algebra> fsi_chains(std::vector<Algebra> const& generators) {
    std::vector<Algebra> out;
    for (size_t g = 0; g < generators.size(); ++g) {
      Algebra const& G = generators[g];
      if (!G.is_chain()) {
        auto res = check_identity(G, semilinearity_equation());
        if (!res.holds) {
          std::vector<int> w{static_cast<int>(g)};
          w.insert(w.end(), res.witness.begin(), res.witness.end());
          throw Error(ErrorKind::NotSemilinear, G.name() + " is not semilinear", w);
        }
      }
      for (auto const& S : subuniverses(G)) {
        Algebra sub = subalgebra(G, S);
        for (auto const& theta : congruences(sub)) {
          auto Q = chain_copy(theta.is_identity() ? sub : quotient(sub, theta));
          if (!Q) {
            continue;
          }
          bool dup = std::any_of(out.begin(), out.end(), [&](Algebra const& X) { return same_chain(X, *Q); });
          if (!dup) {
            out.push_back(*Q);
          }
        }
      }
    }
    std::sort(out.begin(), out.end(), [](Algebra const& a, Algebra const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      if (a.mult_table() != b.mult_table()) {
        return a.mult_table() < b.mult_table();
      }
      auto key = [](Algebra const& x) {
        auto c = x.constants();
        return std::tuple(x.unit(), c.f.value_or(-1), c.bot.value_or(-1), c.top.value_or(-1));
      };
      return key(a) < key(b);
    });
    for (size_t i = 0; i < out.size(); ++i) {
      out[i] = out[i].renamed("K" + std::to_string(i) + "(" + std::to_string(out[i].size()) + ")");
    }
    return out;
  }

  ApDecision decide_ap(std::vector<Algebra> const& generators, bool cross_check, int workers) {
    ApDecision d;
    d.chains = fsi_chains(generators);
    for (size_t i = 0; i < d.chains.size(); ++i) {
      auto cep = has_cep(d.chains[i]);
      if (!cep.holds) {
        d.ap        = false;
        d.reason    = ApDecision::Reason::cep_failure;
        d.cep_chain = i;
        d.cep       = cep;
        return d;
      }
    }
    d.check = class_has_1ap(d.chains, workers);
    d.ap    = d.check->holds;
    if (!d.ap) {
      d.reason = ApDecision::Reason::span_failure;
    }
    if (cross_check) {
      d.essential_check = class_has_eap(d.chains, workers);
      d.routes_agree    = d.essential_check->holds == d.check->holds;
    }
    return d;
  }

  FastPathResult simple_chain_ap(Algebra const& A) {
    FastPathResult r;
    if (A.size() == 1) {
      r.outcome = FastPathResult::Outcome::ap;
      r.reason  = "trivial algebra";
      return r;
    }
    if (!A.is_chain()) {
      throw Error(ErrorKind::NotAChain, A.name() + " is not a chain");
    }
    if (!classify(A).simple) {
      throw Error(ErrorKind::NotSimple, A.name() + " is not simple");
    }
    if (!has_cep(A).holds) {
      r.outcome = FastPathResult::Outcome::not_ap;
      r.reason  = "CEP fails";
      return r;
    }
    auto subs = subuniverses(A);
    std::vector<Algebra> algs;
    for (auto const& S : subs) {
      algs.push_back(subalgebra(A, S));
    }
    for (size_t i = 0; i < algs.size(); ++i) {
      for (size_t j = i + 1; j < algs.size(); ++j) {
        if (isomorphic(algs[i], algs[j])) {
          r.outcome = FastPathResult::Outcome::not_ap;
          r.reason  = "distinct isomorphic subalgebras " + show(subs[i]) + " and " + show(subs[j]);
          return r;
        }
      }
    }
    r.outcome = FastPathResult::Outcome::ap;
    r.reason  = "CEP holds and the " + std::to_string(subs.size()) + " subalgebras are pairwise non-isomorphic";
    return r;
  }

  FastPathResult strictly_simple_ap(Algebra const& A) {
    FastPathResult r;
    if (A.size() == 1) {
      r.outcome = FastPathResult::Outcome::ap;
      r.reason  = "trivial algebra";
    } else if (classify(A).strictly_simple) {
      r.outcome = FastPathResult::Outcome::ap;
      r.reason  = "strictly simple";
    } else {
      r.reason = "not strictly simple";
    }
    return r;
  }

}  // namespace rlw
