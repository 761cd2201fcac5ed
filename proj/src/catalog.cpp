#include "rlw/catalog.hpp"

#include <algorithm>
#include <cstdlib>

namespace rlw {

  namespace {
    void require(bool ok, std::string const& what) {
      if (!ok) {
        throw Error(ErrorKind::BadParameter, what);
      }
    }

    bool is_prime(int p) {
      if (p < 2) {
        return false;
      }
      for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    // A chain whose elements carry integer labels; the product is given on
    // labels.
    template <typename Mul>
    Algebra labelled_chain(std::string                name,
                           std::vector<long> const&   labels,
                           long                       unit,
                           Mul&&                      mul,
                           Constants                  constants = {}) {
      int  n    = static_cast<int>(labels.size());
      auto code = [&](long v) {
        auto it = std::find(labels.begin(), labels.end(), v);
        if (it == labels.end()) {
          throw Error(ErrorKind::BadParameter, "product leaves the carrier");
        }
        return static_cast<Elem>(it - labels.begin());
      };
      Table t(n);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          t(x, y) = code(mul(labels[x], labels[y]));
        }
      }
      return Algebra(std::move(name), Order::chain(n), code(unit), t, constants);
    }

    struct FigureSpec {
      char const*                    name;
      std::vector<std::string>       elements;  // ascending
      std::string                    unit;
      std::string                    f;  // empty when f is not designated
      bool                           commutative;
      bool                           involutive;
      bool                           square_increasing;
      std::vector<std::string>       idempotent, non_idempotent, central, non_central;
      std::vector<std::string>       equations;
    };

    std::vector<FigureSpec> const& figures() {
      // Node shapes: round = central, square = not central; filled =
      // idempotent, open = not idempotent. Equations are the printed labels;
      // for A2, B2, C2 they also include the multiplication rules for
      // elements outside [b,e].
      static std::vector<FigureSpec> const specs = {
          {"cepfail",
           {"bot", "c", "b", "a", "e"},
           "e",
           "",
           false,
           false,
           false,
           {"e", "a", "b", "bot"},
           {"c"},
           {"e", "b", "bot"},
           {"a", "c"},
           {"c = c*a", "bot = a*c"}},
          {"strictsimp",
           {"bot", "b", "e", "a"},
           "e",
           "",
           false,
           false,
           false,
           {"a", "e", "b", "bot"},
           {},
           {"e", "bot"},
           {"a", "b"},
           {"a*b = a", "b*a = b"}},
          {"idem-B",
           {"bot", "a", "e", "top"},
           "e",
           "",
           false,
           false,
           false,
           {"top", "e", "a", "bot"},
           {},
           {"e", "bot"},
           {"top", "a"},
           {"top = top*a", "a = a*top"}},
          {"idem-C",
           {"bot", "d", "c", "e", "b", "top"},
           "e",
           "",
           false,
           false,
           false,
           {"top", "b", "e", "c", "d", "bot"},
           {},
           {"e", "bot"},
           {"top", "b", "c", "d"},
           {"top = top*d", "b = b*c", "c = c*b", "d = d*top", "d = b*d"}},
          {"A1",
           {"bot", "e", "f", "top"},
           "e",
           "f",
           true,
           true,
           true,
           {"top", "e", "bot"},
           {"f"},
           {},
           {},
           {"f*f = top", "f = ~e", "e = ~f", "~(f*f) = bot"}},
          {"B1",
           {"bot", "e", "a", "f", "top"},
           "e",
           "f",
           true,
           true,
           true,
           {"top", "a", "e", "bot"},
           {"f"},
           {},
           {},
           {"f*f = top", "f = ~e", "~a = a", "e = ~f", "~(f*f) = bot"}},
          {"C1",
           {"bot", "e", "b", "f", "top"},
           "e",
           "f",
           true,
           true,
           true,
           {"top", "e", "bot"},
           {"f", "b"},
           {},
           {},
           {"f*f = top", "b*b = f", "f = ~e", "~b = b", "~f = e", "~(f*f) = bot"}},
          {"A2",
           {"f", "na", "nb", "b", "a", "e"},
           "e",
           "f",
           true,
           true,
           false,
           {"e", "a", "b", "f"},
           {"nb", "na"},
           {},
           {},
           {"a*b = b",
            "nb = ~b",
            "na = ~a",
            "f = ~e",
            "c*~d = ~(c->d) where c,d in [b,e]",
            "~c*~d = f where c,d in [b,e]"}},
          {"B2",
           {"f", "na", "nx", "nb", "b", "x", "a", "e"},
           "e",
           "f",
           true,
           true,
           false,
           {"e", "a", "b", "f"},
           {"x", "nb", "nx", "na"},
           {},
           {},
           {"a*x = x",
            "x*x = b",
            "nb = ~b",
            "nx = ~x",
            "na = ~a",
            "f = ~e",
            "c*~d = ~(c->d) where c,d in [b,e]",
            "~c*~d = f where c,d in [b,e]"}},
          {"C2",
           {"f", "na", "ny", "nz", "nb", "b", "z", "y", "a", "e"},
           "e",
           "f",
           true,
           true,
           false,
           {"e", "a", "b", "f"},
           {"y", "z", "nb", "nz", "ny", "na"},
           {},
           {},
           {"a*z = z",
            "a*y = z",
            "y*y = b",
            "z*z = b",
            "nb = ~b",
            "nz = ~z",
            "ny = ~y",
            "na = ~a",
            "f = ~e",
            "c*~d = ~(c->d) where c,d in [b,e]",
            "~c*~d = f where c,d in [b,e]"}},
      };
      return specs;
    }

    FigureSpec const& find_figure(std::string_view name) {
      for (auto const& s : figures()) {
        if (name == s.name) {
          return s;
        }
      }
      throw Error(ErrorKind::BadParameter, "unknown figure \"" + std::string(name) + "\"");
    }

    std::vector<std::string> split(std::string_view s, char sep) {
      std::vector<std::string> out;
      size_t                   pos = 0;
      while (true) {
        size_t next = s.find(sep, pos);
        out.emplace_back(s.substr(pos, next - pos));
        if (next == std::string_view::npos) {
          return out;
        }
        pos = next + 1;
      }
    }
  }  // namespace

  Algebra goedel_chain(int m) {
    require(m >= 1, "goedel needs m >= 1");
    Algebra A = relative_stone_chain(m);
    return Algebra("G_" + std::to_string(m), A.order(), A.unit(), A.mult_table(), Constants{std::nullopt, 0, std::nullopt});
  }

  Algebra relative_stone_chain(int m) {
    require(m >= 1, "rsa needs m >= 1");
    std::vector<long> labels;
    for (long v = -m + 1; v <= 0; ++v) {
      labels.push_back(v);
    }
    return labelled_chain("R_" + std::to_string(m), labels, 0, [](long a, long b) { return std::min(a, b); });
  }

  Algebra sugihara_chain(int n) {
    require(n >= 1, "sugihara needs n >= 1");
    std::vector<long> labels;
    int               m = n / 2;
    for (long v = -m; v <= m; ++v) {
      if (v != 0 || n % 2 == 1) {
        labels.push_back(v);
      }
    }
    long e = n % 2 == 1 ? 0 : 1;
    long f = n % 2 == 1 ? 0 : -1;
    auto mul = [](long a, long b) {
      if (std::labs(a) == std::labs(b)) {
        return std::min(a, b);
      }
      return std::labs(a) > std::labs(b) ? a : b;
    };
    Algebra A = labelled_chain("S_" + std::to_string(n), labels, e, mul);
    Elem    fc = static_cast<Elem>(std::find(labels.begin(), labels.end(), f) - labels.begin());
    return Algebra(A.name(), A.order(), A.unit(), A.mult_table(), Constants{fc, std::nullopt, std::nullopt});
  }

  Algebra commutative_idempotent_chain(int m, int n) {
    require(m >= 0 && n >= 0, "com needs m, n >= 0");
    // b_k is coded m - k, e is m + 1, a_i is m + n + 2 - i
    int   size = m + n + 3;
    Elem  e    = m + 1;
    Table t(size);
    for (Elem x = 0; x < size; ++x) {
      for (Elem y = 0; y < size; ++y) {
        if (x == e || y == e) {
          t(x, y) = x == e ? y : x;
        } else if (x < e && y < e) {
          t(x, y) = std::min(x, y);
        } else if (x > e && y > e) {
          t(x, y) = std::max(x, y);
        } else {
          t(x, y) = std::min(x, y);
        }
      }
    }
    return Algebra("C(" + std::to_string(m) + "," + std::to_string(n) + ")", Order::chain(size), e, t);
  }

  Algebra lukasiewicz_chain(int n, bool mv) {
    require(n >= 1, "luk needs n >= 1");
    std::vector<long> labels;
    for (long v = 0; v <= n; ++v) {
      labels.push_back(v);
    }
    Algebra A = labelled_chain("L_" + std::to_string(n) + (mv ? "" : "-hoop"),
                               labels,
                               n,
                               [n](long a, long b) { return std::max(a + b - n, 0L); });
    if (!mv) {
      return A;
    }
    return Algebra(A.name(), A.order(), A.unit(), A.mult_table(), Constants{0, 0, std::nullopt});
  }

  Algebra de_morgan_chain(int p) {
    require(is_prime(p), "dmm needs a prime p");
    require(p <= 29, "dmm p is too large");
    std::vector<long> labels{0};
    for (int k = 0; k <= p + 1; ++k) {
      labels.push_back(1L << k);
    }
    long    cap = 1L << (p + 1);
    Algebra A   = labelled_chain(
        "M_" + std::to_string(p), labels, 1, [cap](long a, long b) { return std::min(a * b, cap); });
    int n = A.size();
    return Algebra(A.name(), A.order(), A.unit(), A.mult_table(), Constants{p + 1, 0, n - 1});
  }

  Algebra make_family(std::string_view family, std::vector<int> const& params, std::string_view mode) {
    auto need = [&](size_t k) {
      require(params.size() == k,
              std::string(family) + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (family == "goedel") {
      need(1);
      return goedel_chain(params[0]);
    }
    if (family == "rsa") {
      need(1);
      return relative_stone_chain(params[0]);
    }
    if (family == "sugihara") {
      need(1);
      return sugihara_chain(params[0]);
    }
    if (family == "com") {
      need(2);
      return commutative_idempotent_chain(params[0], params[1]);
    }
    if (family == "luk") {
      need(1);
      require(mode.empty() || mode == "mv" || mode == "hoop", "luk mode must be mv or hoop");
      return lukasiewicz_chain(params[0], mode != "hoop");
    }
    if (family == "dmm") {
      need(1);
      return de_morgan_chain(params[0]);
    }
    throw Error(ErrorKind::BadParameter, "unknown family \"" + std::string(family) + "\"");
  }

  std::vector<std::string> figure_names() {
    std::vector<std::string> out;
    for (auto const& s : figures()) {
      out.emplace_back(s.name);
    }
    return out;
  }

  PartialAlgebra figure_partial(std::string_view name) {
    FigureSpec const& s = find_figure(name);
    PartialAlgebra    P;
    P.name          = s.name;
    int n           = static_cast<int>(s.elements.size());
    P.order         = Order::chain(n);
    P.element_names = s.elements;
    NameMap names   = P.names();
    auto    code    = [&](std::string const& e) { return names.at(e); };
    P.unit          = code(s.unit);
    P.mult.assign(static_cast<size_t>(n) * n, std::nullopt);
    if (!s.f.empty()) {
      P.constants.f = code(s.f);
    }
    P.commutative = s.commutative;
    if (s.involutive) {
      P.involutive_f = true;
    }
    if (s.square_increasing) {
      P.filter.square_increasing = true;
    }
    for (auto const& e : s.idempotent) {
      P.elements.idempotent.push_back(code(e));
    }
    for (auto const& e : s.non_idempotent) {
      P.elements.non_idempotent.push_back(code(e));
    }
    for (auto const& e : s.central) {
      P.elements.central.push_back(code(e));
    }
    for (auto const& e : s.non_central) {
      P.elements.non_central.push_back(code(e));
    }
    P.equations = s.equations;
    return P;
  }

  Algebra make_figure(std::string_view name) {
    return complete_partial(figure_partial(name), {}).algebras.front();
  }

  std::size_t figure_multiplicity(std::string_view name) {
    return search_completions(figure_partial(name), {}).algebras.size();
  }

  Elem figure_element(std::string_view figure, std::string_view element) {
    FigureSpec const& s  = find_figure(figure);
    auto              it = std::find(s.elements.begin(), s.elements.end(), element);
    if (it == s.elements.end()) {
      throw Error(ErrorKind::BadParameter, "figure has no element \"" + std::string(element) + "\"");
    }
    return static_cast<Elem>(it - s.elements.begin());
  }

  Algebra resolve_catalog(std::string_view address) {
    if (address.rfind("catalog:", 0) == 0) {
      address.remove_prefix(8);
    }
    auto parts = split(address, ':');
    require(!parts.empty() && !parts[0].empty(), "empty catalog address");
    if (parts[0] == "figure") {
      require(parts.size() == 2, "figure address is figure:<name>");
      return make_figure(parts[1]);
    }
    std::vector<int> params;
    std::string      mode;
    for (size_t i = 1; i < parts.size(); ++i) {
      char* end = nullptr;
      long  v   = std::strtol(parts[i].c_str(), &end, 10);
      if (!parts[i].empty() && *end == '\0') {
        params.push_back(static_cast<int>(v));
      } else if (i == parts.size() - 1) {
        mode = parts[i];
      } else {
        throw Error(ErrorKind::BadParameter, "bad catalog parameter \"" + parts[i] + "\"");
      }
    }
    return make_family(parts[0], params, mode);
  }

  Algebra load_algebra_or_catalog(std::string const& ref) {
    if (ref.rfind("catalog:", 0) == 0) {
      return resolve_catalog(ref);
    }
    return load_algebra(ref);
  }

  std::vector<Algebra> catalog_up_to(int max_size, bool with_figures) {
    std::vector<Algebra> out;
    for (int m = 1; m <= max_size; ++m) {
      out.push_back(goedel_chain(m));
      out.push_back(relative_stone_chain(m));
      out.push_back(sugihara_chain(m));
    }
    for (int m = 0; m + 3 <= max_size; ++m) {
      for (int n = 0; m + n + 3 <= max_size; ++n) {
        out.push_back(commutative_idempotent_chain(m, n));
      }
    }
    for (int n = 1; n + 1 <= max_size; ++n) {
      out.push_back(lukasiewicz_chain(n, true));
      out.push_back(lukasiewicz_chain(n, false));
    }
    for (int p = 2; p + 3 <= max_size; ++p) {
      if (is_prime(p)) {
        out.push_back(de_morgan_chain(p));
      }
    }
    if (with_figures) {
      for (auto const& name : figure_names()) {
        out.push_back(make_figure(name));
      }
    }
    return out;
  }

}  // namespace rlw
