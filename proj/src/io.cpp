#include "rlw/io.hpp"

#include <fstream>
#include <sstream>

namespace rlw {

  namespace detail {
    json const& member(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
      }
      return j.at(key);
    }

    int as_int(json const& j, char const* what) {
      if (!j.is_number_integer()) {
        throw Error(ErrorKind::ParseError, std::string(what) + " must be an integer");
      }
      return j.get<int>();
    }

    Order order_from_json(json const& j, int n) {
      if (j.is_string()) {
        if (j.get<std::string>() != "chain") {
          throw Error(ErrorKind::ParseError, "leq must be \"chain\" or a 0/1 matrix");
        }
        return Order::chain(n);
      }
      if (!j.is_array() || j.size() != static_cast<size_t>(n)) {
        throw Error(ErrorKind::ParseError, "leq matrix has wrong dimensions");
      }
      std::vector<std::uint8_t> m;
      for (auto const& row : j) {
        if (!row.is_array() || row.size() != static_cast<size_t>(n)) {
          throw Error(ErrorKind::ParseError, "leq matrix has wrong dimensions");
        }
        for (auto const& v : row) {
          int b = as_int(v, "leq entry");
          if (b != 0 && b != 1) {
            throw Error(ErrorKind::ParseError, "leq entries must be 0 or 1");
          }
          m.push_back(static_cast<std::uint8_t>(b));
        }
      }
      return Order::from_matrix(n, std::move(m));
    }

    Constants constants_from_json(json const& j, int n) {
      if (!j.is_object()) {
        throw Error(ErrorKind::ParseError, "constants must be an object");
      }
      Constants c;
      for (auto const& [key, value] : j.items()) {
        if (value.is_null()) {
          continue;
        }
        int v = as_int(value, "constant");
        if (v < 0 || v >= n) {
          throw Error(ErrorKind::BadConstant, key + " out of range", {v});
        }
        if (key == "f") {
          c.f = v;
        } else if (key == "bot") {
          c.bot = v;
        } else if (key == "top") {
          c.top = v;
        } else {
          throw Error(ErrorKind::ParseError, "unknown constant \"" + key + "\"");
        }
      }
      return c;
    }

    json order_to_json(Order const& o) {
      if (o.is_chain()) {
        return "chain";
      }
      json rows = json::array();
      for (int x = 0; x < o.size(); ++x) {
        json row = json::array();
        for (int y = 0; y < o.size(); ++y) {
          row.push_back(o.leq(x, y) ? 1 : 0);
        }
        rows.push_back(row);
      }
      return rows;
    }

    json constants_to_json(Constants const& c) {
      json j = json::object();
      if (c.f) {
        j["f"] = *c.f;
      }
      if (c.bot) {
        j["bot"] = *c.bot;
      }
      if (c.top) {
        j["top"] = *c.top;
      }
      return j;
    }
  }  // namespace detail

  json to_json(Algebra const& A) {
    json j;
    j["format"] = algebra_format;
    j["name"]   = A.name();
    j["size"]   = A.size();
    j["leq"]    = detail::order_to_json(A.order());
    j["unit"]   = A.unit();
    json rows   = json::array();
    for (Elem x = 0; x < A.size(); ++x) {
      json row = json::array();
      for (Elem y = 0; y < A.size(); ++y) {
        row.push_back(A.mult(x, y));
      }
      rows.push_back(row);
    }
    j["mult"]      = rows;
    j["constants"] = detail::constants_to_json(A.constants());
    return j;
  }

  Algebra algebra_from_json(json const& j) {
    using namespace detail;
    if (!j.is_object()) {
      throw Error(ErrorKind::ParseError, "algebra must be a JSON object");
    }
    auto const& format = member(j, "format");
    if (!format.is_string() || format.get<std::string>() != algebra_format) {
      throw Error(ErrorKind::ParseError, "unsupported format");
    }
    auto const& name = member(j, "name");
    if (!name.is_string()) {
      throw Error(ErrorKind::ParseError, "name must be a string");
    }
    int n = as_int(member(j, "size"), "size");
    if (n < 1) {
      throw Error(ErrorKind::ParseError, "size must be positive");
    }
    Order order = order_from_json(member(j, "leq"), n);
    int   unit  = as_int(member(j, "unit"), "unit");
    auto const& rows = member(j, "mult");
    if (!rows.is_array() || rows.size() != static_cast<size_t>(n)) {
      throw Error(ErrorKind::ParseError, "mult must be an n x n array");
    }
    Table mult(n);
    for (int x = 0; x < n; ++x) {
      if (!rows[x].is_array() || rows[x].size() != static_cast<size_t>(n)) {
        throw Error(ErrorKind::ParseError, "mult must be an n x n array");
      }
      for (int y = 0; y < n; ++y) {
        mult(x, y) = as_int(rows[x][y], "mult entry");
      }
    }
    Constants c = j.contains("constants") ? constants_from_json(j.at("constants"), n) : Constants{};
    return Algebra(name.get<std::string>(), std::move(order), unit, std::move(mult), c);
  }

  std::string serialize(Algebra const& A) {
    return to_json(A).dump() + "\n";
  }

  Algebra parse_algebra(std::string_view text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::exception const& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    return algebra_from_json(j);
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::ParseError, "cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_file(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error(ErrorKind::Usage, "cannot write " + path.string());
    }
    out << text;
  }

  Algebra load_algebra(std::filesystem::path const& path) {
    return parse_algebra(read_file(path));
  }

  void save_algebra(Algebra const& A, std::filesystem::path const& path) {
    write_file(path, serialize(A));
  }

}  // namespace rlw
