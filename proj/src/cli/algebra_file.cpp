#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "opsplit/cli.hpp"
#include "opsplit/error.hpp"
#include "opsplit/scalar.hpp"

namespace opsplit::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, field + ": " + what);
}

std::size_t read_index(const json& v, std::size_t dim, const std::string& field) {
  if (!v.is_number_integer()) parse_fail(field, "index must be an integer");
  const long long i = v.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= dim)
    throw Error(ErrorCode::IndexOutOfRange, field + ": index " + std::to_string(i) + " outside 0.." +
                                                std::to_string(dim == 0 ? 0 : dim - 1));
  return static_cast<std::size_t>(i);
}

Scalar read_coeff(const json& v, const std::string& field) {
  if (!v.is_string()) parse_fail(field, "coefficient must be a rational string like \"p/q\"");
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const Error&) {
    parse_fail(field, "malformed rational " + v.dump());
  }
}

// Each entry is `arity` indices followed by a coefficient string.
template <typename Store>
void read_entries(const json& list, std::size_t dim, std::size_t arity, const std::string& field, Store store) {
  if (!list.is_array()) parse_fail(field, "expected a list of entries");
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string ef = field + "[" + std::to_string(e) + "]";
    const json& entry = list[e];
    if (!entry.is_array() || entry.size() != arity + 1)
      parse_fail(ef, "expected " + std::to_string(arity) + " indices and a coefficient");
    std::vector<std::size_t> idx(arity);
    for (std::size_t a = 0; a < arity; ++a) idx[a] = read_index(entry[a], dim, ef + "[" + std::to_string(a) + "]");
    if (!seen.insert(idx).second) throw Error(ErrorCode::DuplicateEntry, ef + ": index tuple repeated");
    store(idx, read_coeff(entry[arity], ef + "[" + std::to_string(arity) + "]"));
  }
}

const json& object_field(const json& doc, const char* name) {
  const json& v = doc.at(name);
  if (!v.is_object()) parse_fail(name, "expected an object keyed by name");
  return v;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

template <typename Body>
void write_group(std::ostringstream& os, const char* name, const Body& body, bool& first_group) {
  os << (first_group ? "" : ",\n") << "  " << quoted(name) << ": {";
  first_group = false;
  body();
  os << "\n  }";
}

void write_entries(std::ostringstream& os, const std::vector<std::string>& rows) {
  if (rows.empty()) {
    os << "[]";
    return;
  }
  os << "[\n";
  for (std::size_t r = 0; r < rows.size(); ++r) os << "      " << rows[r] << (r + 1 < rows.size() ? ",\n" : "\n");
  os << "    ]";
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) parse_fail("document", "expected a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const std::set<std::string> known = {"dim", "basis", "mults", "forms", "maps", "comults"};
    if (!known.count(it.key())) parse_fail(it.key(), "unknown field");
  }
  AlgebraFile f;
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
    parse_fail("dim", "required positive integer");
  f.dim = doc["dim"].get<std::size_t>();
  if (doc.contains("basis")) {
    const json& b = doc["basis"];
    if (!b.is_array() || b.size() != f.dim) parse_fail("basis", "expected " + std::to_string(f.dim) + " labels");
    for (const json& l : b) {
      if (!l.is_string()) parse_fail("basis", "labels must be strings");
      f.basis.push_back(l.get<std::string>());
    }
  }
  if (!doc.contains("mults")) parse_fail("mults", "required");
  const json& mults = object_field(doc, "mults");
  if (mults.empty()) parse_fail("mults", "at least one multiplication is required");
  const std::size_t n = f.dim;
  for (auto it = mults.begin(); it != mults.end(); ++it) {
    Tensor3 t(n);
    read_entries(it.value(), n, 3, "mults." + it.key(),
                 [&](const std::vector<std::size_t>& i, const Scalar& c) { t(i[0], i[1], i[2]) = c; });
    f.mults.emplace(it.key(), std::move(t));
  }
  for (const char* group : {"forms", "maps"}) {
    if (!doc.contains(group)) continue;
    const json& g = object_field(doc, group);
    for (auto it = g.begin(); it != g.end(); ++it) {
      Matrix m(n, n);
      read_entries(it.value(), n, 2, std::string(group) + "." + it.key(),
                   [&](const std::vector<std::size_t>& i, const Scalar& c) { m(i[0], i[1]) = c; });
      (std::string(group) == "forms" ? f.forms : f.maps).emplace(it.key(), std::move(m));
    }
  }
  if (doc.contains("comults")) {
    const json& g = object_field(doc, "comults");
    for (auto it = g.begin(); it != g.end(); ++it) {
      Tensor3 t(n);
      read_entries(it.value(), n, 3, "comults." + it.key(),
                   [&](const std::vector<std::size_t>& i, const Scalar& c) { t(i[0], i[1], i[2]) = c; });
      f.comults.emplace(it.key(), Comult{std::move(t)});
    }
  }
  return f;
}

std::string serialize_algebra_file(const AlgebraFile& f) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << f.dim;
  if (!f.basis.empty()) {
    os << ",\n  \"basis\": [";
    for (std::size_t i = 0; i < f.basis.size(); ++i) os << (i ? ", " : "") << quoted(f.basis[i]);
    os << "]";
  }
  os << ",\n";
  bool first = true;
  auto tensor_rows = [](const Tensor3& t) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < t.d0(); ++i)
      for (std::size_t j = 0; j < t.d1(); ++j)
        for (std::size_t k = 0; k < t.d2(); ++k)
          if (t(i, j, k) != 0)
            rows.push_back("[" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ", " +
                           quoted(format_scalar(t(i, j, k))) + "]");
    return rows;
  };
  auto matrix_rows = [](const Matrix& m) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0)
          rows.push_back("[" + std::to_string(i) + ", " + std::to_string(j) + ", " + quoted(format_scalar(m(i, j))) +
                         "]");
    return rows;
  };
  auto group = [&](const char* name, const auto& items, const auto& rows_of) {
    if (items.empty() && std::string(name) != "mults") return;
    write_group(os, name, [&] {
      bool first_item = true;
      for (const auto& [key, value] : items) {
        os << (first_item ? "\n" : ",\n") << "    " << quoted(key) << ": ";
        first_item = false;
        write_entries(os, rows_of(value));
      }
    }, first);
  };
  group("mults", f.mults, tensor_rows);
  group("forms", f.forms, matrix_rows);
  group("maps", f.maps, matrix_rows);
  group("comults", f.comults, [&](const Comult& c) { return tensor_rows(c.coeffs); });
  os << "\n}\n";
  return os.str();
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str());
}

void write_algebra_file(const AlgebraFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Usage, path + ": cannot write");
  out << serialize_algebra_file(f);
}

}  // namespace opsplit::cli
