#include "rlw/properties.hpp"

#include "rlw/term.hpp"

namespace rlw {

  namespace {
    Elem power(Algebra const& A, Elem x, int k) {
      Elem acc = A.unit();
      for (int i = 0; i < k; ++i) {
        acc = A.mult(acc, x);
      }
      return acc;
    }

    bool holds(Algebra const& A, std::string_view eq) {
      return check_identity(A, eq).holds;
    }
  }  // namespace

  bool is_knotted(Algebra const& A, int m, int n) {
    for (Elem x = 0; x < A.size(); ++x) {
      if (!A.leq(power(A, x, m), power(A, x, n))) {
        return false;
      }
    }
    return true;
  }

  bool is_n_potent(Algebra const& A, int n) {
    for (Elem x = 0; x < A.size(); ++x) {
      if (power(A, x, n + 1) != power(A, x, n)) {
        return false;
      }
    }
    return true;
  }

  bool is_idempotent(Algebra const& A) {
    return is_n_potent(A, 1);
  }

  bool is_integral(Algebra const& A) {
    return A.top() == A.unit();
  }

  bool is_admissible(Algebra const& A) {
    if (!A.is_chain()) {
      return false;
    }
    Elem e = A.unit();
    for (Elem a = 0; a < A.size(); ++a) {
      if (a != e && (A.ldiv(a, e) == e || A.rdiv(e, a) == e)) {
        return false;
      }
    }
    return true;
  }

  bool is_semilinear(Algebra const& A) {
    if (A.is_chain()) {
      return true;
    }
    return holds(A, semilinearity_equation());
  }

  PropertyProfile property_profile(Algebra const& A) {
    PropertyProfile p;
    p.commutative = A.is_commutative();
    p.idempotent  = is_idempotent(A);
    for (int n = 1; n <= A.size() + 1; ++n) {
      if (is_n_potent(A, n)) {
        p.n_potent = n;
        break;
      }
    }
    p.square_increasing = is_knotted(A, 1, 2);
    p.square_decreasing = is_knotted(A, 2, 1);
    p.integral          = is_integral(A);
    p.bounded           = A.constants().bot.has_value() && A.constants().top.has_value();
    p.semilinear        = is_semilinear(A);
    p.admissible        = is_admissible(A);
    p.lower_involutive  = holds(A, "x^lr^lr = x");
    if (A.constants().f) {
      p.cyclic_f          = holds(A, "~x = -x");
      p.left_involutive_f = holds(A, "-~x = x");
      p.right_involutive_f = holds(A, "~-x = x");
      p.involutive_f       = *p.left_involutive_f && *p.right_involutive_f;
    }
    return p;
  }

  bool ProfileFilter::empty() const {
    return !commutative && !idempotent && !integral && !square_increasing && !square_decreasing
           && !admissible && !lower_involutive && !cyclic_f && !involutive_f && !n_potent
           && knotted.empty() && equations.empty();
  }

  std::vector<std::string> ProfileFilter::specs() const {
    std::vector<std::string> out;
    auto flag = [&](std::optional<bool> const& v, char const* name) {
      if (v) {
        out.push_back(std::string(*v ? "" : "!") + name);
      }
    };
    flag(commutative, "commutative");
    flag(idempotent, "idempotent");
    flag(integral, "integral");
    flag(square_increasing, "sqinc");
    flag(square_decreasing, "sqdec");
    flag(admissible, "admissible");
    flag(lower_involutive, "lowinv");
    flag(cyclic_f, "cyclic");
    flag(involutive_f, "involutive");
    if (n_potent) {
      out.push_back("potent=" + std::to_string(*n_potent));
    }
    for (auto [m, n] : knotted) {
      out.push_back("knotted=" + std::to_string(m) + "," + std::to_string(n));
    }
    for (auto const& e : equations) {
      out.push_back("eq=" + e);
    }
    return out;
  }

  std::string ProfileFilter::str() const {
    std::string s;
    for (auto const& p : specs()) {
      s += (s.empty() ? "" : " ") + p;
    }
    return s.empty() ? "any" : s;
  }

  std::vector<std::string> ProfileFilter::positive_equations() const {
    std::vector<std::string> out;
    if (square_increasing.value_or(false)) {
      out.push_back("x <= x*x");
    }
    if (square_decreasing.value_or(false)) {
      out.push_back("x*x <= x");
    }
    if (integral.value_or(false)) {
      out.push_back("x <= e");
    }
    if (lower_involutive.value_or(false)) {
      out.push_back("x^lr^lr = x");
    }
    if (cyclic_f.value_or(false)) {
      out.push_back("~x = -x");
    }
    if (involutive_f.value_or(false)) {
      out.push_back("-~x = x");
      out.push_back("~-x = x");
    }
    if (n_potent) {
      out.push_back("x^" + std::to_string(*n_potent + 1) + " = x^" + std::to_string(*n_potent));
    }
    for (auto [m, n] : knotted) {
      out.push_back("x^" + std::to_string(m) + " <= x^" + std::to_string(n));
    }
    for (auto const& e : equations) {
      out.push_back(e);
    }
    return out;
  }

  bool satisfies(Algebra const& A, ProfileFilter const& filter) {
    auto check = [](std::optional<bool> const& want, bool have) { return !want || *want == have; };
    if (!check(filter.commutative, A.is_commutative()) || !check(filter.idempotent, is_idempotent(A))
        || !check(filter.integral, is_integral(A))
        || !check(filter.square_increasing, is_knotted(A, 1, 2))
        || !check(filter.square_decreasing, is_knotted(A, 2, 1))
        || !check(filter.admissible, is_admissible(A))) {
      return false;
    }
    if (filter.lower_involutive
        && *filter.lower_involutive != holds(A, "x^lr^lr = x")) {
      return false;
    }
    if (filter.cyclic_f || filter.involutive_f) {
      if (!A.constants().f) {
        return false;
      }
      if (!check(filter.cyclic_f, holds(A, "~x = -x"))
          || !check(filter.involutive_f, holds(A, "-~x = x") && holds(A, "~-x = x"))) {
        return false;
      }
    }
    if (filter.n_potent && !is_n_potent(A, *filter.n_potent)) {
      return false;
    }
    for (auto [m, n] : filter.knotted) {
      if (!is_knotted(A, m, n)) {
        return false;
      }
    }
    for (auto const& e : filter.equations) {
      if (!holds(A, e)) {
        return false;
      }
    }
    return true;
  }

  void add_property(ProfileFilter& filter, std::string const& spec) {
    std::string s     = spec;
    bool        value = true;
    if (!s.empty() && s[0] == '!') {
      value = false;
      s     = s.substr(1);
    }
    auto param = [&](std::string const& prefix) -> std::optional<std::string> {
      if (s.rfind(prefix, 0) == 0) {
        return s.substr(prefix.size());
      }
      return std::nullopt;
    };
    try {
      if (s == "commutative") {
        filter.commutative = value;
      } else if (s == "idempotent") {
        filter.idempotent = value;
      } else if (s == "integral") {
        filter.integral = value;
      } else if (s == "sqinc") {
        filter.square_increasing = value;
      } else if (s == "sqdec") {
        filter.square_decreasing = value;
      } else if (s == "admissible") {
        filter.admissible = value;
      } else if (s == "lowinv") {
        filter.lower_involutive = value;
      } else if (s == "cyclic") {
        filter.cyclic_f = value;
      } else if (s == "involutive") {
        filter.involutive_f = value;
      } else if (auto p = param("potent=")) {
        filter.n_potent = std::stoi(*p);
      } else if (auto k = param("knotted=")) {
        auto comma = k->find(',');
        if (comma == std::string::npos) {
          throw Error(ErrorKind::Usage, "knotted needs m,n");
        }
        filter.knotted.emplace_back(std::stoi(k->substr(0, comma)), std::stoi(k->substr(comma + 1)));
      } else if (auto e = param("eq=")) {
        Equation::parse(*e);
        filter.equations.push_back(*e);
      } else {
        throw Error(ErrorKind::Usage, "unknown property \"" + spec + "\"");
      }
    } catch (std::logic_error const&) {
      throw Error(ErrorKind::Usage, "bad property parameter in \"" + spec + "\"");
    }
  }

}  // namespace rlw
