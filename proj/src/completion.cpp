#include "rlw/completion.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>

#include "rlw/parallel.hpp"

namespace rlw {

  namespace {

    using Mask = std::uint32_t;

    int single(Mask m) {
      return std::has_single_bit(m) ? std::countr_zero(m) : -1;
    }

    constexpr int unknown  = -1;
    constexpr int conflict = -2;

    struct CompiledEquation {
      Equation                       source;
      Term                           lhs, rhs;  // expanded
      std::vector<std::vector<Elem>> instances;
    };

    class Engine {
     public:
      Engine(PartialAlgebra const& P, CompletionOptions const& options)
          : _P(P), _opt(options), _n(P.size()) {
        if (_n < 1 || _n > 32) {
          throw Error(ErrorKind::BadParameter, "completion supports 1 to 32 elements");
        }
        _full  = _n == 32 ? ~Mask(0) : (Mask(1) << _n) - 1;
        std::tie(_meet, _join) = lattice_operations(P.order);
        _chain = P.order.is_chain();
        _up.assign(_n, 0);
        _down.assign(_n, 0);
        for (Elem v = 0; v < _n; ++v) {
          for (Elem w = 0; w < _n; ++w) {
            if (P.order.leq(v, w)) {
              _up[v] |= Mask(1) << w;
              _down[w] |= Mask(1) << v;
            }
          }
        }
        for (Elem a = 0; a < _n; ++a) {
          for (Elem b = 0; b < _n; ++b) {
            if (a == b || !P.order.leq(a, b)) {
              continue;
            }
            bool cover = true;
            for (Elem c = 0; c < _n && cover; ++c) {
              if (c != a && c != b && P.order.leq(a, c) && P.order.leq(c, b)) {
                cover = false;
              }
            }
            if (cover) {
              _covers.emplace_back(a, b);
            }
          }
        }
        _bottom = 0;
        for (Elem x = 0; x < _n; ++x) {
          _bottom = _meet(_bottom, x);
        }
        build_initial();
        build_links();
        build_equations();
      }

      CompletionResult run() {
        auto             start = std::chrono::steady_clock::now();
        CompletionResult result;
        std::vector<Mask> root = _init;
        if (_feasible && propagate(root)) {
          if (_opt.limit > 0 || _opt.workers <= 1) {
            std::vector<Algebra> found;
            dfs(root, found);
            result.algebras = std::move(found);
          } else {
            auto tasks = split(root, static_cast<size_t>(_opt.workers) * 8);
            std::vector<std::vector<Algebra>> found(tasks.size());
            parallel_for(tasks.size(), _opt.workers, [&](size_t i) { dfs(tasks[i], found[i]); });
            for (auto& f : found) {
              for (auto& A : f) {
                result.algebras.push_back(std::move(A));
              }
            }
          }
        }
        std::sort(result.algebras.begin(),
                  result.algebras.end(),
                  [](Algebra const& a, Algebra const& b) { return a.mult_table() < b.mult_table(); });
        result.truncated = _stop.load();
        result.nodes     = _nodes.load();
        result.seconds
            = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
      }

     private:
      int cell(Elem x, Elem y) const {
        return x * _n + y;
      }

      void restrict_init(int c, Mask m) {
        _init[c] &= m;
        if (_init[c] == 0) {
          _feasible = false;
        }
      }

      void build_initial() {
        auto const& P = _P;
        _init.assign(static_cast<size_t>(_n) * _n, _full);
        if (!P.mult.empty()) {
          if (P.mult.size() != _init.size()) {
            throw Error(ErrorKind::ParseError, "partial table has wrong dimensions");
          }
          for (size_t c = 0; c < P.mult.size(); ++c) {
            if (P.mult[c]) {
              if (*P.mult[c] < 0 || *P.mult[c] >= _n) {
                throw Error(ErrorKind::ParseError, "table entry out of range");
              }
              restrict_init(static_cast<int>(c), Mask(1) << *P.mult[c]);
            }
          }
        }
        if (!P.domains.empty()) {
          if (P.domains.size() != _init.size()) {
            throw Error(ErrorKind::ParseError, "domain list has wrong length");
          }
          for (size_t c = 0; c < _init.size(); ++c) {
            restrict_init(static_cast<int>(c), P.domains[c]);
          }
        }
        if (P.unit < 0 || P.unit >= _n) {
          throw Error(ErrorKind::ParseError, "unit out of range");
        }
        for (Elem y = 0; y < _n; ++y) {
          restrict_init(cell(P.unit, y), Mask(1) << y);
          restrict_init(cell(y, P.unit), Mask(1) << y);
          // bottom is absorbing in every residuated lattice
          restrict_init(cell(_bottom, y), Mask(1) << _bottom);
          restrict_init(cell(y, _bottom), Mask(1) << _bottom);
        }
        auto check = [&](Elem x) {
          if (x < 0 || x >= _n) {
            throw Error(ErrorKind::ParseError, "element constraint out of range", {x});
          }
        };
        for (Elem x : P.elements.idempotent) {
          check(x);
          restrict_init(cell(x, x), Mask(1) << x);
        }
        if (P.filter.idempotent.value_or(false)) {
          for (Elem x = 0; x < _n; ++x) {
            restrict_init(cell(x, x), Mask(1) << x);
          }
        }
        for (Elem x : P.elements.non_idempotent) {
          check(x);
          restrict_init(cell(x, x), ~(Mask(1) << x));
        }
        for (Elem x : P.elements.central) {
          check(x);
        }
        for (Elem x : P.elements.non_central) {
          check(x);
        }
      }

      void build_links() {
        bool all = _P.commutative || _P.filter.commutative.value_or(false);
        for (Elem x = 0; x < _n; ++x) {
          for (Elem y = x + 1; y < _n; ++y) {
            bool linked = all;
            for (Elem c : _P.elements.central) {
              linked = linked || c == x || c == y;
            }
            if (linked) {
              _links.emplace_back(cell(x, y), cell(y, x));
            }
          }
        }
      }

      void build_equations() {
        std::vector<std::string> texts = _P.equations;
        if (_P.involutive_f.value_or(false)) {
          texts.push_back("-~x = x");
          texts.push_back("~-x = x");
        }
        for (auto const& e : _P.filter.positive_equations()) {
          texts.push_back(e);
        }
        NameMap names = _P.names();
        for (auto const& text : texts) {
          CompiledEquation ce;
          ce.source = Equation::parse(text, &names);
          ce.lhs    = ce.source.lhs.expanded();
          ce.rhs    = ce.source.rhs.expanded();
          for (Term const* t : {&ce.source.lhs, &ce.source.rhs}) {
            for (auto const& node : t->nodes()) {
              if (node.op == TermOp::arrow && !_P.commutative
                  && !_P.filter.commutative.value_or(false)) {
                throw Error(ErrorKind::BadTerm, "'->' needs a commutative algebra");
              }
              if (node.op == TermOp::neg) {
                throw Error(ErrorKind::BadTerm, "use ~ or - in completion constraints");
              }
            }
            check_constants(ce.lhs);
            check_constants(ce.rhs);
          }
          std::vector<std::vector<Elem>> ranges(ce.source.vars.size());
          for (auto& r : ranges) {
            for (Elem x = 0; x < _n; ++x) {
              r.push_back(x);
            }
          }
          for (auto const& g : ce.source.guards) {
            Elem lo = closed_value(g.lo), hi = closed_value(g.hi);
            std::vector<Elem> r;
            for (Elem x = 0; x < _n; ++x) {
              if (_P.order.leq(lo, x) && _P.order.leq(x, hi)) {
                r.push_back(x);
              }
            }
            for (int v : g.vars) {
              ranges[v] = r;
            }
          }
          for_each_assignment(ranges, [&](std::span<Elem const> env) {
            ce.instances.emplace_back(env.begin(), env.end());
            return true;
          });
          _eqs.push_back(std::move(ce));
        }
      }

      void check_constants(Term const& t) const {
        for (auto const& node : t.nodes()) {
          if ((node.op == TermOp::f && !_P.constants.f)
              || (node.op == TermOp::bot && !_P.constants.bot)
              || (node.op == TermOp::top && !_P.constants.top)) {
            throw Error(ErrorKind::MissingConstant, "constraint uses an undesignated constant");
          }
          if (node.op == TermOp::elem && (node.value < 0 || node.value >= _n)) {
            throw Error(ErrorKind::BadTerm, "element literal out of range", {node.value});
          }
        }
      }

      Elem closed_value(Term const& t) const {
        Term              e = t.expanded();
        check_constants(e);
        std::vector<int>  reg;
        int v = eval(e, {}, _init, reg);
        if (v < 0) {
          throw Error(ErrorKind::BadTerm, "guard bounds must be elements or constants");
        }
        return v;
      }

      // Three-valued evaluation over the current domains.
      int eval(Term const&              t,
               std::span<Elem const>    env,
               std::vector<Mask> const& d,
               std::vector<int>&        reg) const {
        auto const& nodes = t.nodes();
        reg.resize(nodes.size());
        for (size_t i = 0; i < nodes.size(); ++i) {
          TermNode const& node = nodes[i];
          int             v    = unknown;
          int             a    = node.a >= 0 ? reg[node.a] : 0;
          int             b    = node.b >= 0 ? reg[node.b] : 0;
          if (a == conflict || b == conflict) {
            v = conflict;
          } else if (node.a >= 0 && (a == unknown || (node.b >= 0 && b == unknown))) {
            v = unknown;
          } else {
            switch (node.op) {
              case TermOp::var: v = env[node.value]; break;
              case TermOp::elem: v = node.value; break;
              case TermOp::unit: v = _P.unit; break;
              case TermOp::f: v = *_P.constants.f; break;
              case TermOp::bot: v = *_P.constants.bot; break;
              case TermOp::top: v = *_P.constants.top; break;
              case TermOp::mul: v = single(d[cell(a, b)]); break;
              case TermOp::meet: v = _meet(a, b); break;
              case TermOp::join: v = _join(a, b); break;
              case TermOp::ldiv: v = residual(d, a, b, true); break;
              case TermOp::rdiv: v = residual(d, b, a, false); break;
              default: v = unknown; break;
            }
          }
          reg[i] = v;
        }
        return reg[t.root()];
      }

      // left: x\z with x = p, z = q; right: z/y with y = p, z = q
      int residual(std::vector<Mask> const& d, Elem p, Elem q, bool left) const {
        Mask in = 0;
        for (Elem y = 0; y < _n; ++y) {
          Mask m = d[left ? cell(p, y) : cell(y, p)];
          if ((m & ~_down[q]) == 0) {
            in |= Mask(1) << y;
          } else if ((m & _down[q]) != 0) {
            return unknown;
          }
        }
        if (in == 0) {
          return conflict;
        }
        Elem best = std::countr_zero(in);
        for (Mask m = in; m; m &= m - 1) {
          best = _join(best, std::countr_zero(m));
        }
        if ((_down[best] & ~in) != 0) {
          return conflict;
        }
        return best;
      }

      bool narrow(std::vector<Mask>& d, int c, Mask m, bool& changed) const {
        Mask nm = d[c] & m;
        if (nm == 0) {
          return false;
        }
        if (nm != d[c]) {
          d[c]    = nm;
          changed = true;
        }
        return true;
      }

      Mask up_closure(Mask m) const {
        if (_chain) {
          return m ? _up[std::countr_zero(m)] : 0;
        }
        Mask out = 0;
        for (; m; m &= m - 1) {
          out |= _up[std::countr_zero(m)];
        }
        return out;
      }

      Mask down_closure(Mask m) const {
        if (_chain) {
          return m ? _down[31 - std::countl_zero(m)] : 0;
        }
        Mask out = 0;
        for (; m; m &= m - 1) {
          out |= _down[std::countr_zero(m)];
        }
        return out;
      }

      // d[lo] <= d[hi] pointwise must be satisfiable
      bool order_pair(std::vector<Mask>& d, int lo, int hi, bool& changed) const {
        return narrow(d, lo, down_closure(d[hi]), changed)
               && narrow(d, hi, up_closure(d[lo]), changed);
      }

      bool propagate(std::vector<Mask>& d) const {
        std::vector<int> rl, rr;
        bool             changed = true;
        while (changed) {
          changed = false;
          for (auto [c1, c2] : _links) {
            Mask m = d[c1] & d[c2];
            if (!narrow(d, c1, m, changed) || !narrow(d, c2, m, changed)) {
              return false;
            }
          }
          for (auto [a, b] : _covers) {
            for (Elem y = 0; y < _n; ++y) {
              if (!order_pair(d, cell(a, y), cell(b, y), changed)
                  || !order_pair(d, cell(y, a), cell(y, b), changed)) {
                return false;
              }
            }
          }
          for (Elem x = 0; x < _n; ++x) {
            for (Elem y = 0; y < _n; ++y) {
              int p = single(d[cell(x, y)]);
              if (p < 0) {
                continue;
              }
              for (Elem z = 0; z < _n; ++z) {
                int q = single(d[cell(y, z)]);
                if (q < 0) {
                  continue;
                }
                int  c1 = cell(p, z), c2 = cell(x, q);
                Mask m  = d[c1] & d[c2];
                if (!narrow(d, c1, m, changed) || !narrow(d, c2, m, changed)) {
                  return false;
                }
              }
            }
          }
          for (auto const& ce : _eqs) {
            for (auto const& env : ce.instances) {
              if (!apply_equation(ce, env, d, rl, rr, changed)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      // the cell computed at the root of t, if its arguments are known
      int root_cell(Term const& t, std::vector<int> const& reg) const {
        TermNode const& r = t.nodes()[t.root()];
        if (r.op != TermOp::mul || reg[r.a] < 0 || reg[r.b] < 0) {
          return -1;
        }
        return cell(reg[r.a], reg[r.b]);
      }

      bool apply_equation(CompiledEquation const& ce,
                          std::vector<Elem> const& env,
                          std::vector<Mask>&       d,
                          std::vector<int>&        rl,
                          std::vector<int>&        rr,
                          bool&                    changed) const {
        int l = eval(ce.lhs, env, d, rl);
        int r = eval(ce.rhs, env, d, rr);
        if (l == conflict || r == conflict) {
          return false;
        }
        bool eq = ce.source.rel == Relation::eq;
        if (l >= 0 && r >= 0) {
          return eq ? l == r : _P.order.leq(l, r);
        }
        if (l >= 0) {
          int c = root_cell(ce.rhs, rr);
          if (c >= 0) {
            return narrow(d, c, eq ? Mask(1) << l : _up[l], changed);
          }
        } else if (r >= 0) {
          int c = root_cell(ce.lhs, rl);
          if (c >= 0) {
            return narrow(d, c, eq ? Mask(1) << r : _down[r], changed);
          }
        } else if (eq) {
          int c1 = root_cell(ce.lhs, rl), c2 = root_cell(ce.rhs, rr);
          if (c1 >= 0 && c2 >= 0) {
            Mask m = d[c1] & d[c2];
            return narrow(d, c1, m, changed) && narrow(d, c2, m, changed);
          }
        }
        return true;
      }

      int branch_cell(std::vector<Mask> const& d) const {
        int best = -1, best_count = 64;
        for (size_t c = 0; c < d.size(); ++c) {
          int k = std::popcount(d[c]);
          if (k > 1 && k < best_count) {
            best       = static_cast<int>(c);
            best_count = k;
          }
        }
        return best;
      }

      std::vector<std::vector<Mask>> split(std::vector<Mask> const& root, size_t target) const {
        std::vector<std::vector<Mask>> level{root};
        for (int depth = 0; depth < 6 && level.size() < target; ++depth) {
          std::vector<std::vector<Mask>> next;
          bool                           grew = false;
          for (auto& d : level) {
            int c = branch_cell(d);
            if (c < 0) {
              next.push_back(d);
              continue;
            }
            grew = true;
            for (Mask m = d[c]; m; m &= m - 1) {
              auto child = d;
              child[c]   = m & -m;
              ++_nodes;
              if (propagate(child)) {
                next.push_back(std::move(child));
              }
            }
          }
          level = std::move(next);
          if (!grew) {
            break;
          }
        }
        return level;
      }

      void dfs(std::vector<Mask> const& d, std::vector<Algebra>& out) const {
        if (_stop.load(std::memory_order_relaxed)) {
          return;
        }
        int c = branch_cell(d);
        if (c < 0) {
          leaf(d, out);
          return;
        }
        for (Mask m = d[c]; m; m &= m - 1) {
          auto child = d;
          child[c]   = m & -m;
          ++_nodes;
          if (propagate(child)) {
            dfs(child, out);
          }
          if (_stop.load(std::memory_order_relaxed)) {
            return;
          }
        }
      }

      void leaf(std::vector<Mask> const& d, std::vector<Algebra>& out) const {
        Table mult(_n);
        for (Elem x = 0; x < _n; ++x) {
          for (Elem y = 0; y < _n; ++y) {
            mult(x, y) = std::countr_zero(d[cell(x, y)]);
          }
        }
        std::optional<Algebra> A;
        try {
          A.emplace(_P.name, _P.order, _P.unit, mult, _P.constants);
        } catch (Error const&) {
          return;
        }
        for (Elem x : _P.elements.non_central) {
          bool central = true;
          for (Elem y = 0; y < _n && central; ++y) {
            central = A->mult(x, y) == A->mult(y, x);
          }
          if (central) {
            return;
          }
        }
        if (_P.involutive_f && !*_P.involutive_f
            && check_identity(*A, "-~x = x").holds && check_identity(*A, "~-x = x").holds) {
          return;
        }
        if (!satisfies(*A, _P.filter)) {
          return;
        }
        for (auto const& ce : _eqs) {
          if (!check_identity(*A, ce.source).holds) {
            return;
          }
        }
        if (_opt.accept && !_opt.accept(*A)) {
          return;
        }
        out.push_back(std::move(*A));
        if (_opt.limit > 0 && out.size() >= _opt.limit) {
          _stop = true;
        }
      }

      PartialAlgebra const&                 _P;
      CompletionOptions const&              _opt;
      int                                   _n;
      Mask                                  _full = 0;
      Table                                 _meet, _join;
      bool                                  _chain = true;
      Elem                                  _bottom = 0;
      std::vector<Mask>                     _up, _down;
      std::vector<std::pair<Elem, Elem>>    _covers;
      std::vector<std::pair<int, int>>      _links;
      std::vector<CompiledEquation>         _eqs;
      std::vector<Mask>                     _init;
      bool                                  _feasible = true;
      mutable std::atomic<std::uint64_t>    _nodes{0};
      mutable std::atomic<bool>             _stop{false};
    };

    Elem element_ref(json const& v, NameMap const& names, int n) {
      if (v.is_string()) {
        auto it = names.find(v.get<std::string>());
        if (it == names.end()) {
          throw Error(ErrorKind::ParseError, "unknown element \"" + v.get<std::string>() + "\"");
        }
        return it->second;
      }
      int x = detail::as_int(v, "element");
      if (x < 0 || x >= n) {
        throw Error(ErrorKind::ParseError, "element out of range", {x});
      }
      return x;
    }

  }  // namespace

  NameMap PartialAlgebra::names() const {
    NameMap m;
    for (size_t i = 0; i < element_names.size(); ++i) {
      m[element_names[i]] = static_cast<Elem>(i);
    }
    return m;
  }

  CompletionResult search_completions(PartialAlgebra const& P, CompletionOptions const& options) {
    Engine engine(P, options);
    return engine.run();
  }

  CompletionResult complete_partial(PartialAlgebra const& P, CompletionOptions const& options) {
    auto result = search_completions(P, options);
    if (result.algebras.empty()) {
      throw Error(ErrorKind::NoCompletion, "no completion of " + P.name + " exists");
    }
    return result;
  }

  std::vector<Algebra> enumerate_chains(int                  n,
                                        ProfileFilter const& filter,
                                        Signature            signature,
                                        int                  workers) {
    if (n < 1 || n > 32) {
      throw Error(ErrorKind::BadParameter, "chain size must be between 1 and 32");
    }
    std::vector<Algebra> out;
    for (Elem u = 0; u < n; ++u) {
      std::vector<std::optional<Elem>> fs{std::nullopt};
      if (signature.f) {
        fs.clear();
        for (Elem f = 0; f < n; ++f) {
          fs.push_back(f);
        }
      }
      for (auto f : fs) {
        PartialAlgebra P;
        P.name  = "chain";
        P.order = Order::chain(n);
        P.unit  = u;
        P.constants.f = f;
        if (signature.bot) {
          P.constants.bot = 0;
        }
        if (signature.top) {
          P.constants.top = n - 1;
        }
        P.filter = filter;
        CompletionOptions opt;
        opt.workers = workers;
        for (auto& A : search_completions(P, opt).algebras) {
          out.push_back(std::move(A));
        }
      }
    }
    for (size_t i = 0; i < out.size(); ++i) {
      out[i] = out[i].renamed("chain" + std::to_string(n) + "-" + std::to_string(i));
    }
    return out;
  }

  PartialAlgebra partial_from_json(json const& j) {
    using namespace detail;
    PartialAlgebra P;
    if (!j.is_object()) {
      throw Error(ErrorKind::ParseError, "partial algebra must be a JSON object");
    }
    auto const& format = member(j, "format");
    if (!format.is_string() || format.get<std::string>() != algebra_format) {
      throw Error(ErrorKind::ParseError, "unsupported format");
    }
    if (!member(j, "name").is_string()) {
      throw Error(ErrorKind::ParseError, "name must be a string");
    }
    P.name = j.at("name").get<std::string>();
    int n  = as_int(member(j, "size"), "size");
    if (n < 1) {
      throw Error(ErrorKind::ParseError, "size must be positive");
    }
    P.order = order_from_json(member(j, "leq"), n);
    if (j.contains("elements")) {
      auto const& names = j.at("elements");
      if (!names.is_array() || names.size() != static_cast<size_t>(n)) {
        throw Error(ErrorKind::ParseError, "elements must list one name per element");
      }
      for (auto const& s : names) {
        if (!s.is_string()) {
          throw Error(ErrorKind::ParseError, "element names must be strings");
        }
        P.element_names.push_back(s.get<std::string>());
      }
    }
    NameMap names = P.names();
    P.unit        = element_ref(member(j, "unit"), names, n);
    auto const& rows = member(j, "mult");
    if (!rows.is_array() || rows.size() != static_cast<size_t>(n)) {
      throw Error(ErrorKind::ParseError, "mult must be an n x n array");
    }
    for (auto const& row : rows) {
      if (!row.is_array() || row.size() != static_cast<size_t>(n)) {
        throw Error(ErrorKind::ParseError, "mult must be an n x n array");
      }
      for (auto const& v : row) {
        P.mult.push_back(v.is_null() ? std::nullopt : std::optional<Elem>(element_ref(v, names, n)));
      }
    }
    if (j.contains("constants")) {
      json c = j.at("constants");
      for (auto& [key, value] : c.items()) {
        if (value.is_string()) {
          value = element_ref(value, names, n);
        }
      }
      P.constants = constants_from_json(c, n);
    }
    if (j.contains("constraints")) {
      auto const& c = j.at("constraints");
      if (!c.is_object()) {
        throw Error(ErrorKind::ParseError, "constraints must be an object");
      }
      auto list = [&](char const* key, std::vector<Elem>& out) {
        if (c.contains(key)) {
          for (auto const& v : c.at(key)) {
            out.push_back(element_ref(v, names, n));
          }
        }
      };
      if (c.contains("commutative")) {
        P.commutative = c.at("commutative").get<bool>();
      }
      if (c.contains("involutive_f")) {
        P.involutive_f = c.at("involutive_f").get<bool>();
      }
      list("idempotent", P.elements.idempotent);
      list("non_idempotent", P.elements.non_idempotent);
      list("central", P.elements.central);
      list("non_central", P.elements.non_central);
      if (c.contains("equations")) {
        for (auto const& e : c.at("equations")) {
          P.equations.push_back(e.get<std::string>());
        }
      }
      if (c.contains("properties")) {
        for (auto const& p : c.at("properties")) {
          add_property(P.filter, p.get<std::string>());
        }
      }
    }
    return P;
  }

  json to_json(PartialAlgebra const& P) {
    int  n = P.size();
    json j;
    j["format"] = algebra_format;
    j["name"]   = P.name;
    j["size"]   = n;
    j["leq"]    = detail::order_to_json(P.order);
    if (!P.element_names.empty()) {
      j["elements"] = P.element_names;
    }
    j["unit"]  = P.unit;
    json rows  = json::array();
    for (int x = 0; x < n; ++x) {
      json row = json::array();
      for (int y = 0; y < n; ++y) {
        auto v = P.mult.empty() ? std::nullopt : P.mult[static_cast<size_t>(x) * n + y];
        row.push_back(v ? json(*v) : json(nullptr));
      }
      rows.push_back(row);
    }
    j["mult"]      = rows;
    j["constants"] = detail::constants_to_json(P.constants);
    json c;
    c["commutative"] = P.commutative;
    if (P.involutive_f) {
      c["involutive_f"] = *P.involutive_f;
    }
    auto names = [&](std::vector<Elem> const& xs) {
      json a = json::array();
      for (Elem x : xs) {
        if (P.element_names.empty()) {
          a.push_back(x);
        } else {
          a.push_back(P.element_names[x]);
        }
      }
      return a;
    };
    c["idempotent"]     = names(P.elements.idempotent);
    c["non_idempotent"] = names(P.elements.non_idempotent);
    c["central"]        = names(P.elements.central);
    c["non_central"]    = names(P.elements.non_central);
    c["equations"]      = P.equations;
    if (!P.filter.empty()) {
      c["properties"] = P.filter.specs();
    }
    j["constraints"] = c;
    return j;
  }

  PartialAlgebra load_partial(std::filesystem::path const& path) {
    json j;
    try {
      j = json::parse(read_file(path));
    } catch (json::exception const& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    return partial_from_json(j);
  }

}  // namespace rlw
