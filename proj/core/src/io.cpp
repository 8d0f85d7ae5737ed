#include <oscroll/curve_ops.hpp>
#include <oscroll/errors.hpp>
#include <oscroll/io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace oscroll::io {

using exact::BinForm;
using exact::QMatrix;
using exact::Rat;
using json = nlohmann::ordered_json;

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based; report the line it falls on.
    std::size_t line = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) line += text[i] == '\n';
    throw InputError("line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw InputError(path + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + ": missing field '" + key + "'");
  return *it;
}

std::size_t natural(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) throw InputError(path + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

Rat rational(const json& v, const std::string& path) {
  if (!v.is_string()) throw InputError(path + ": expected a rational written as a string, e.g. \"3/4\"");
  try {
    return exact::parse_rat(v.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void check_kind(const json& doc, const std::string& kind, const std::string& path) {
  const auto it = doc.find("kind");
  if (it != doc.end() && (!it->is_string() || it->get<std::string>() != kind))
    throw InputError(path + ".kind: expected \"" + kind + "\"");
}

RationalCurve curve_from(const json& doc, const std::string& path) {
  if (!doc.is_object()) throw InputError(path + ": expected an object");
  check_kind(doc, "curve", path);
  const std::size_t r = natural(field(doc, "ambient_dim", path), path + ".ambient_dim");
  const std::size_t d = natural(field(doc, "form_degree", path), path + ".form_degree");
  const json& rows = field(doc, "forms", path);
  if (!rows.is_array() || rows.size() != r + 1)
    throw InputError(path + ".forms: expected ambient_dim + 1 = " + std::to_string(r + 1) + " rows");
  std::vector<BinForm> forms;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string rp = path + ".forms[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != d + 1)
      throw InputError(rp + ": expected form_degree + 1 = " + std::to_string(d + 1) + " coefficients");
    std::vector<Rat> c;
    for (std::size_t j = 0; j < rows[i].size(); ++j) c.push_back(rational(rows[i][j], rp + "[" + std::to_string(j) + "]"));
    forms.emplace_back(static_cast<int>(d), std::move(c));
  }
  std::string label;
  if (const auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) throw InputError(path + ".label: expected a string");
    label = it->get<std::string>();
  }
  try {
    return RationalCurve(std::move(forms), label);
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

json curve_doc(const RationalCurve& c) {
  json forms = json::array();
  for (const auto& f : c.forms()) {
    json row = json::array();
    for (const auto& q : f.coefficients()) row.push_back(exact::to_string(q));
    forms.push_back(std::move(row));
  }
  return json{{"kind", "curve"},
              {"label", c.label()},
              {"ambient_dim", c.ambient_dim()},
              {"form_degree", c.degree()},
              {"forms", std::move(forms)}};
}

}  // namespace

RationalCurve parse_curve(std::string_view text) { return curve_from(parse_document(text), "curve"); }

DecomposableScroll parse_scroll(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw InputError("scroll: expected an object");
  check_kind(doc, "scroll", "scroll");
  const json& list = field(doc, "curves", "scroll");
  if (!list.is_array() || list.size() < 2) throw InputError("scroll.curves: expected at least two curves");
  std::vector<RationalCurve> cs;
  for (std::size_t i = 0; i < list.size(); ++i) cs.push_back(curve_from(list[i], "scroll.curves[" + std::to_string(i) + "]"));
  if (const auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != cs.size())
      throw InputError("scroll.labels: expected one label per curve");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!(*it)[i].is_string()) throw InputError("scroll.labels[" + std::to_string(i) + "]: expected a string");
      cs[i] = RationalCurve(cs[i].forms(), (*it)[i].get<std::string>());
    }
  }
  return scrolls::build_scroll(std::move(cs));
}

LinearSubspace parse_subspace(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw InputError("subspace: expected an object");
  check_kind(doc, "subspace", "subspace");
  const std::size_t n = natural(field(doc, "ambient_dim", "subspace"), "subspace.ambient_dim");
  const json& rows = field(doc, "basis", "subspace");
  if (!rows.is_array()) throw InputError("subspace.basis: expected an array of rows");
  QMatrix m(rows.size(), n + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string rp = "subspace.basis[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != n + 1)
      throw InputError(rp + ": expected ambient_dim + 1 = " + std::to_string(n + 1) + " coordinates");
    for (std::size_t j = 0; j <= n; ++j) m(i, j) = rational(rows[i][j], rp + "[" + std::to_string(j) + "]");
  }
  return LinearSubspace(n, m);
}

std::string to_json(const RationalCurve& c) { return curve_doc(c).dump(2); }

std::string to_json(const DecomposableScroll& sc) {
  json curves = json::array();
  for (const auto& c : sc.curves()) curves.push_back(curve_doc(c));
  return json{{"kind", "scroll"}, {"labels", sc.labels()}, {"curves", std::move(curves)}}.dump(2);
}

std::string to_json(const LinearSubspace& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.basis().rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < s.basis().cols(); ++j) row.push_back(exact::to_string(s.basis()(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"kind", "subspace"}, {"ambient_dim", s.ambient_dim()}, {"basis", std::move(rows)}}.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

curves::CurvePoint parse_curve_point(std::string_view spec) {
  if (spec == "inf") return curves::CurvePoint::infinity();
  if (spec.starts_with("t=")) spec.remove_prefix(2);
  try {
    return curves::CurvePoint::affine(exact::parse_rat(spec));
  } catch (const std::exception&) {
    throw InputError("point '" + std::string(spec) + "': expected t=<rational> or inf");
  }
}

ScrollPoint parse_scroll_point(std::string_view spec, std::size_t n) {
  const auto semi = spec.find(';');
  if (semi == std::string_view::npos) throw InputError("point '" + std::string(spec) + "': expected <base>;<fiber>");
  const auto base = parse_curve_point(spec.substr(0, semi));
  std::vector<Rat> fiber;
  std::string_view rest = spec.substr(semi + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    try {
      fiber.push_back(exact::parse_rat(item));
    } catch (const std::exception&) {
      throw InputError("point '" + std::string(spec) + "': bad fiber entry '" + std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (fiber.size() != n)
    throw InputError("point '" + std::string(spec) + "': expected " + std::to_string(n) + " fiber coordinates");
  try {
    return ScrollPoint::make(base, std::move(fiber));
  } catch (const std::invalid_argument& e) {
    throw InputError("point '" + std::string(spec) + "': " + e.what());
  }
}

}  // namespace oscroll::io
