#include "rlw/term.hpp"

#include <algorithm>
#include <cctype>

namespace rlw {

  namespace {

    enum class Tok {
      ident,
      integer,
      literal,  // #k
      lparen,
      rparen,
      lbracket,
      rbracket,
      comma,
      star,
      caret,
      backslash,
      slash,
      meet,
      join,
      arrow,
      tilde,
      minus,
      bang,
      eq,
      le,
      ge,
      end
    };

    struct Token {
      Tok         kind;
      std::string text;
      size_t      pos;
    };

    std::vector<Token> tokenize(std::string_view s) {
      std::vector<Token> out;
      size_t             i = 0;
      auto               push = [&](Tok k, size_t len) {
        out.push_back({k, std::string(s.substr(i, len)), i});
        i += len;
      };
      while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          continue;
        }
        auto next = [&](char d) { return i + 1 < s.size() && s[i + 1] == d; };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          size_t j = i;
          while (j < s.size()
                 && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'
                     || s[j] == '\'')) {
            ++j;
          }
          push(Tok::ident, j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          size_t j = i;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
            ++j;
          }
          push(Tok::integer, j - i);
        } else if (c == '#') {
          size_t j = i + 1;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
            ++j;
          }
          if (j == i + 1) {
            throw Error(ErrorKind::ParseError, "'#' must be followed by an element code");
          }
          push(Tok::literal, j - i);
        } else if (c == '/' && next('\\')) {
          push(Tok::meet, 2);
        } else if (c == '\\' && next('/')) {
          push(Tok::join, 2);
        } else if (c == '-' && next('>')) {
          push(Tok::arrow, 2);
        } else if (c == '<' && next('=')) {
          push(Tok::le, 2);
        } else if (c == '>' && next('=')) {
          push(Tok::ge, 2);
        } else {
          Tok k;
          switch (c) {
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case '[': k = Tok::lbracket; break;
            case ']': k = Tok::rbracket; break;
            case ',': k = Tok::comma; break;
            case '*': k = Tok::star; break;
            case '^': k = Tok::caret; break;
            case '\\': k = Tok::backslash; break;
            case '/': k = Tok::slash; break;
            case '~': k = Tok::tilde; break;
            case '-': k = Tok::minus; break;
            case '!': k = Tok::bang; break;
            case '=': k = Tok::eq; break;
            default:
              throw Error(ErrorKind::ParseError,
                          "unexpected character '" + std::string(1, c) + "' at "
                              + std::to_string(i));
          }
          push(k, 1);
        }
      }
      out.push_back({Tok::end, "", s.size()});
      return out;
    }

    class Parser {
     public:
      Parser(std::vector<Token> toks, std::vector<std::string>& vars, NameMap const* names)
          : _toks(std::move(toks)), _vars(vars), _names(names) {}

      Term term() {
        _t = Term();
        _t.set_root(join());
        return std::move(_t);
      }

      Token const& peek() const {
        return _toks[_i];
      }
      Token const& take() {
        return _toks[_i++];
      }
      bool accept(Tok k) {
        if (peek().kind == k) {
          ++_i;
          return true;
        }
        return false;
      }
      void expect(Tok k, char const* what) {
        if (!accept(k)) {
          fail(std::string("expected ") + what);
        }
      }
      [[noreturn]] void fail(std::string const& msg) const {
        throw Error(ErrorKind::ParseError,
                    msg + " at position " + std::to_string(peek().pos) + " near '" + peek().text
                        + "'");
      }
      size_t position() const {
        return _i;
      }

     private:
      int node(TermOp op, int a = -1, int b = -1, int value = 0) {
        return _t.add({op, a, b, value});
      }

      int join() {
        int lhs = meet();
        while (accept(Tok::join)) {
          lhs = node(TermOp::join, lhs, meet());
        }
        return lhs;
      }

      int meet() {
        int lhs = arrow();
        while (accept(Tok::meet)) {
          lhs = node(TermOp::meet, lhs, arrow());
        }
        return lhs;
      }

      int arrow() {
        int lhs = div();
        if (accept(Tok::arrow)) {
          return node(TermOp::arrow, lhs, arrow());
        }
        return lhs;
      }

      int div() {
        int lhs = prod();
        while (true) {
          if (accept(Tok::backslash)) {
            lhs = node(TermOp::ldiv, lhs, prod());
          } else if (accept(Tok::slash)) {
            lhs = node(TermOp::rdiv, lhs, prod());
          } else {
            return lhs;
          }
        }
      }

      int prod() {
        int lhs = unary();
        while (accept(Tok::star)) {
          lhs = node(TermOp::mul, lhs, unary());
        }
        return lhs;
      }

      int unary() {
        if (accept(Tok::tilde)) {
          return node(TermOp::lneg, unary());
        }
        if (accept(Tok::minus)) {
          return node(TermOp::rneg, unary());
        }
        if (accept(Tok::bang)) {
          return node(TermOp::neg, unary());
        }
        return postfix();
      }

      int postfix() {
        int t = atom();
        while (accept(Tok::caret)) {
          Token const& k = take();
          if (k.kind == Tok::integer) {
            t = node(TermOp::power, t, -1, std::stoi(k.text));
          } else if (k.kind == Tok::ident && k.text == "l") {
            t = node(TermOp::linv, t);
          } else if (k.kind == Tok::ident && k.text == "r") {
            t = node(TermOp::rinv, t);
          } else if (k.kind == Tok::ident && k.text == "lr") {
            t = node(TermOp::lower, t);
          } else {
            --_i;
            fail("expected exponent, l, r or lr after '^'");
          }
        }
        return t;
      }

      int atom() {
        if (accept(Tok::lparen)) {
          int t = join();
          expect(Tok::rparen, "')'");
          return t;
        }
        Token const& k = take();
        if (k.kind == Tok::literal) {
          return node(TermOp::elem, -1, -1, std::stoi(k.text.substr(1)));
        }
        if (k.kind != Tok::ident) {
          --_i;
          fail("expected a term");
        }
        if (_names) {
          if (auto it = _names->find(k.text); it != _names->end()) {
            return node(TermOp::elem, -1, -1, it->second);
          }
        }
        if (k.text == "e") {
          return node(TermOp::unit);
        }
        if (k.text == "f") {
          return node(TermOp::f);
        }
        if (k.text == "bot") {
          return node(TermOp::bot);
        }
        if (k.text == "top") {
          return node(TermOp::top);
        }
        return node(TermOp::var, -1, -1, intern(k.text));
      }

     public:
      int intern(std::string const& name) {
        auto it = std::find(_vars.begin(), _vars.end(), name);
        if (it != _vars.end()) {
          return static_cast<int>(it - _vars.begin());
        }
        _vars.push_back(name);
        return static_cast<int>(_vars.size() - 1);
      }

     private:
      std::vector<Token>        _toks;
      size_t                    _i = 0;
      std::vector<std::string>& _vars;
      NameMap const*            _names;
      Term                      _t;
    };

    bool is_binary(TermOp op) {
      switch (op) {
        case TermOp::mul:
        case TermOp::meet:
        case TermOp::join:
        case TermOp::ldiv:
        case TermOp::rdiv:
        case TermOp::arrow: return true;
        default: return false;
      }
    }

  }  // namespace

  int Term::add(TermNode node) {
    _nodes.push_back(node);
    return static_cast<int>(_nodes.size() - 1);
  }

  Term Term::parse(std::string_view text, std::vector<std::string>& vars, NameMap const* names) {
    Parser p(tokenize(text), vars, names);
    Term   t = p.term();
    if (p.peek().kind != Tok::end) {
      p.fail("trailing input");
    }
    return t;
  }

  Term Term::parse(std::string_view text) {
    std::vector<std::string> vars;
    return parse(text, vars);
  }

  bool Term::uses(TermOp op) const {
    return std::any_of(_nodes.begin(), _nodes.end(), [op](auto const& n) { return n.op == op; });
  }

  int Term::var_count() const {
    int m = 0;
    for (auto const& n : _nodes) {
      if (n.op == TermOp::var) {
        m = std::max(m, n.value + 1);
      }
    }
    return m;
  }

  Term Term::expanded() const {
    Term out;
    if (_root < 0) {
      return out;
    }
    auto rec = [&](auto&& self, int i) -> int {
      TermNode const& n = _nodes[i];
      switch (n.op) {
        case TermOp::var:
        case TermOp::elem:
        case TermOp::unit:
        case TermOp::f:
        case TermOp::bot:
        case TermOp::top: return out.add(n);
        case TermOp::mul:
        case TermOp::meet:
        case TermOp::join:
        case TermOp::ldiv:
        case TermOp::rdiv: {
          int a = self(self, n.a);
          int b = self(self, n.b);
          return out.add({n.op, a, b});
        }
        case TermOp::arrow: {
          int a = self(self, n.a);
          int b = self(self, n.b);
          return out.add({TermOp::ldiv, a, b});
        }
        case TermOp::power: {
          if (n.value == 0) {
            return out.add({TermOp::unit});
          }
          int base = self(self, n.a);
          int acc  = base;
          for (int k = 1; k < n.value; ++k) {
            acc = out.add({TermOp::mul, acc, base});
          }
          return acc;
        }
        case TermOp::lneg:
        case TermOp::neg: {
          int a = self(self, n.a);
          int f = out.add({TermOp::f});
          return out.add({TermOp::ldiv, a, f});
        }
        case TermOp::rneg: {
          int a = self(self, n.a);
          int f = out.add({TermOp::f});
          return out.add({TermOp::rdiv, f, a});
        }
        case TermOp::linv: {
          int a = self(self, n.a);
          int e = out.add({TermOp::unit});
          return out.add({TermOp::rdiv, e, a});
        }
        case TermOp::rinv: {
          int a = self(self, n.a);
          int e = out.add({TermOp::unit});
          return out.add({TermOp::ldiv, a, e});
        }
        case TermOp::lower: {
          int a = self(self, n.a);
          int e = out.add({TermOp::unit});
          int l = out.add({TermOp::rdiv, e, a});
          int r = out.add({TermOp::ldiv, a, e});
          return out.add({TermOp::meet, l, r});
        }
      }
      return -1;
    };
    out.set_root(rec(rec, _root));
    return out;
  }

  std::string Term::str() const {
    if (_root < 0) {
      return "";
    }
    auto rec = [&](auto&& self, int i) -> std::string {
      TermNode const& n = _nodes[i];
      auto            sub = [&](int j) {
        std::string s = self(self, j);
        return is_binary(_nodes[j].op) ? "(" + s + ")" : s;
      };
      switch (n.op) {
        case TermOp::var: return "v" + std::to_string(n.value);
        case TermOp::elem: return "#" + std::to_string(n.value);
        case TermOp::unit: return "e";
        case TermOp::f: return "f";
        case TermOp::bot: return "bot";
        case TermOp::top: return "top";
        case TermOp::mul: return sub(n.a) + "*" + sub(n.b);
        case TermOp::meet: return sub(n.a) + " /\\ " + sub(n.b);
        case TermOp::join: return sub(n.a) + " \\/ " + sub(n.b);
        case TermOp::ldiv: return sub(n.a) + "\\" + sub(n.b);
        case TermOp::rdiv: return sub(n.a) + "/" + sub(n.b);
        case TermOp::arrow: return sub(n.a) + " -> " + sub(n.b);
        case TermOp::power: return sub(n.a) + "^" + std::to_string(n.value);
        case TermOp::lneg: return "~" + sub(n.a);
        case TermOp::rneg: return "-" + sub(n.a);
        case TermOp::neg: return "!" + sub(n.a);
        case TermOp::linv: return sub(n.a) + "^l";
        case TermOp::rinv: return sub(n.a) + "^r";
        case TermOp::lower: return sub(n.a) + "^lr";
      }
      return "?";
    };
    return rec(rec, _root);
  }

  Equation Equation::parse(std::string_view text, NameMap const* names) {
    Equation eq;
    eq.text = std::string(text);

    auto toks = tokenize(text);
    // split at the relation symbol and at the keyword "where", both at depth 0
    size_t rel = 0, where = toks.size() - 1;
    int    depth = 0;
    for (size_t i = 0; i < toks.size(); ++i) {
      auto k = toks[i].kind;
      if (k == Tok::lparen || k == Tok::lbracket) {
        ++depth;
      } else if (k == Tok::rparen || k == Tok::rbracket) {
        --depth;
      } else if (depth == 0 && rel == 0 && (k == Tok::eq || k == Tok::le || k == Tok::ge)) {
        rel = i;
      } else if (depth == 0 && k == Tok::ident && toks[i].text == "where"
                 && where == toks.size() - 1) {
        where = i;
      }
    }
    if (rel == 0 || rel > where) {
      throw Error(ErrorKind::ParseError, "equation needs '=', '<=' or '>='");
    }
    auto slice = [&](size_t from, size_t to) {
      return std::string(text.substr(toks[from].pos, toks[to].pos - toks[from].pos));
    };
    std::string lhs = slice(0, rel), rhs = slice(rel + 1, where);
    eq.lhs          = Term::parse(lhs, eq.vars, names);
    eq.rhs          = Term::parse(rhs, eq.vars, names);
    if (toks[rel].kind == Tok::ge) {
      std::swap(eq.lhs, eq.rhs);
    }
    eq.rel = toks[rel].kind == Tok::eq ? Relation::eq : Relation::leq;

    if (where != toks.size() - 1) {
      std::vector<Token> rest(toks.begin() + where + 1, toks.end());
      Parser             p(rest, eq.vars, names);
      while (true) {
        Guard g;
        do {
          Token const& v = p.take();
          if (v.kind != Tok::ident) {
            p.fail("expected a variable in guard");
          }
          g.vars.push_back(p.intern(v.text));
        } while (p.accept(Tok::comma));
        if (!(p.peek().kind == Tok::ident && p.peek().text == "in")) {
          p.fail("expected 'in'");
        }
        p.take();
        p.expect(Tok::lbracket, "'['");
        std::vector<std::string> none;
        // interval ends are parsed as separate closed terms
        size_t start = p.position();
        int    d     = 0;
        size_t comma = 0, close = 0;
        for (size_t i = start; i < rest.size(); ++i) {
          auto k = rest[i].kind;
          if (k == Tok::lparen || k == Tok::lbracket) {
            ++d;
          } else if (k == Tok::rparen) {
            --d;
          } else if (k == Tok::rbracket) {
            if (d == 0) {
              close = i;
              break;
            }
            --d;
          } else if (k == Tok::comma && d == 0 && comma == 0) {
            comma = i;
          }
        }
        if (comma == 0 || close == 0) {
          p.fail("expected '[lo,hi]'");
        }
        auto piece = [&](size_t from, size_t to) {
          return std::string(text.substr(toks[where + 1 + from].pos,
                                         toks[where + 1 + to].pos - toks[where + 1 + from].pos));
        };
        g.lo = Term::parse(piece(start, comma), none, names);
        g.hi = Term::parse(piece(comma + 1, close), none, names);
        if (!none.empty()) {
          throw Error(ErrorKind::ParseError, "guard bounds must be closed terms");
        }
        while (p.position() <= close) {
          p.take();
        }
        eq.guards.push_back(std::move(g));
        if (p.peek().kind == Tok::ident && p.peek().text == "and") {
          p.take();
          continue;
        }
        if (p.peek().kind != Tok::end) {
          p.fail("trailing input in guard");
        }
        break;
      }
    }
    return eq;
  }

  void check_term_supported(Algebra const& A, Term const& t) {
    for (auto const& n : t.nodes()) {
      switch (n.op) {
        case TermOp::f:
        case TermOp::lneg:
        case TermOp::rneg: A.constant(Constant::f); break;
        case TermOp::bot: A.constant(Constant::bot); break;
        case TermOp::top: A.constant(Constant::top); break;
        case TermOp::elem:
          if (n.value < 0 || n.value >= A.size()) {
            throw Error(ErrorKind::BadTerm, "element literal out of range", {n.value});
          }
          break;
        case TermOp::arrow:
          if (!A.is_commutative()) {
            throw Error(ErrorKind::BadTerm, "'->' needs a commutative algebra");
          }
          break;
        case TermOp::neg: {
          Elem f = A.constant(Constant::f);
          for (Elem x = 0; x < A.size(); ++x) {
            if (A.ldiv(x, f) != A.rdiv(f, x)) {
              throw Error(ErrorKind::BadTerm, "'!' needs f to be cyclic", {x});
            }
          }
          break;
        }
        default: break;
      }
    }
  }

  Evaluator::Evaluator(Algebra const& A, Term const& t) : _A(&A) {
    check_term_supported(A, t);
    _t = t.expanded();
    _reg.resize(_t.nodes().size());
  }

  Elem Evaluator::operator()(std::span<Elem const> env) {
    auto const& nodes = _t.nodes();
    Algebra const& A  = *_A;
    for (size_t i = 0; i < nodes.size(); ++i) {
      TermNode const& n = nodes[i];
      Elem            v = 0;
      switch (n.op) {
        case TermOp::var: v = env[n.value]; break;
        case TermOp::elem: v = n.value; break;
        case TermOp::unit: v = A.unit(); break;
        case TermOp::f: v = *A.constants().f; break;
        case TermOp::bot: v = *A.constants().bot; break;
        case TermOp::top: v = *A.constants().top; break;
        case TermOp::mul: v = A.mult(_reg[n.a], _reg[n.b]); break;
        case TermOp::meet: v = A.meet(_reg[n.a], _reg[n.b]); break;
        case TermOp::join: v = A.join(_reg[n.a], _reg[n.b]); break;
        case TermOp::ldiv: v = A.ldiv(_reg[n.a], _reg[n.b]); break;
        case TermOp::rdiv: v = A.rdiv(_reg[n.a], _reg[n.b]); break;
        default: break;
      }
      _reg[i] = v;
    }
    return _reg[_t.root()];
  }

  Elem eval_term(Algebra const& A, Term const& t, std::span<Elem const> env) {
    if (static_cast<int>(env.size()) < t.var_count()) {
      throw Error(ErrorKind::BadTerm, "not every variable has a value");
    }
    Evaluator ev(A, t);
    return ev(env);
  }

  bool for_each_assignment(std::vector<std::vector<Elem>> const&           ranges,
                           std::function<bool(std::span<Elem const>)> const& f) {
    size_t const      k = ranges.size();
    std::vector<size_t> idx(k, 0);
    std::vector<Elem> env(k);
    for (auto const& r : ranges) {
      if (r.empty()) {
        return true;
      }
    }
    for (size_t i = 0; i < k; ++i) {
      env[i] = ranges[i][0];
    }
    while (true) {
      if (!f(env)) {
        return false;
      }
      size_t i = 0;
      for (; i < k; ++i) {
        if (++idx[i] < ranges[i].size()) {
          env[i] = ranges[i][idx[i]];
          break;
        }
        idx[i] = 0;
        env[i] = ranges[i][0];
      }
      if (i == k) {
        return true;
      }
    }
  }

  std::vector<std::vector<Elem>> variable_ranges(Algebra const& A, Equation const& eq) {
    std::vector<std::vector<Elem>> ranges(eq.vars.size(), all_elements(A));
    for (auto const& g : eq.guards) {
      Elem lo = eval_term(A, g.lo, {});
      Elem hi = eval_term(A, g.hi, {});
      std::vector<Elem> r;
      for (Elem x = 0; x < A.size(); ++x) {
        if (A.leq(lo, x) && A.leq(x, hi)) {
          r.push_back(x);
        }
      }
      for (int v : g.vars) {
        ranges[v] = r;
      }
    }
    return ranges;
  }

  IdentityResult check_identity(Algebra const& A, Equation const& eq) {
    Evaluator      lhs(A, eq.lhs), rhs(A, eq.rhs);
    IdentityResult result;
    for_each_assignment(variable_ranges(A, eq), [&](std::span<Elem const> env) {
      Elem a = lhs(env), b = rhs(env);
      bool ok = eq.rel == Relation::eq ? a == b : A.leq(a, b);
      if (!ok) {
        result.holds = false;
        result.witness.assign(env.begin(), env.end());
      }
      return ok;
    });
    return result;
  }

  IdentityResult check_identity(Algebra const& A, std::string_view equation) {
    return check_identity(A, Equation::parse(equation));
  }

  std::string_view semilinearity_equation() {
    return "(z\\(x/(x \\/ y))*z /\\ e) \\/ (w*(y/(x \\/ y))/w /\\ e) = e";
  }

}  // namespace rlw
