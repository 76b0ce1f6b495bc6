#include "quadnet/io.hpp"

#include "quadnet/error.hpp"

#include <fstream>
#include <sstream>

namespace quadnet {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("net document: missing field '") + key + "'");
  return j.at(key);
}

Rational rationalFromJson(const Json& j) {
  if (j.is_string()) return parseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidInput("rationals must be strings \"p/q\" or integers");
}

Polynomial quadricFromJson(const Json& terms) {
  if (!terms.is_array()) throw InvalidInput("net document: a quadric must be a list of terms");
  Polynomial q(6);
  for (const auto& t : terms) {
    const auto& mono = field(t, "monomial");
    if (!mono.is_array() || mono.size() != 6) throw InvalidInput("net document: monomial must have 6 exponents");
    std::array<int, 6> e{};
    for (std::size_t i = 0; i < 6; ++i) {
      if (!mono[i].is_number_integer() || mono[i].get<int>() < 0) throw InvalidInput("net document: exponents must be nonnegative integers");
      e[i] = mono[i].get<int>();
    }
    q.addTerm(Monomial::fromExponents(e), rationalFromJson(field(t, "coefficient")));
  }
  return q;
}

} // namespace

RatMatrix matrixFromJson(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw InvalidInput("matrix: expected " + std::to_string(rows) + " rows");
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InvalidInput("matrix: expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rationalFromJson(j[r][c]);
  }
  return m;
}

Json toJson(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(toText(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json toJson(const WeightVector& w) { return Json(w.weights); }

Json toJson(const Witness& w) {
  Json j;
  j["rho"] = toJson(w.rho);
  j["type"] = w.type;
  j["frame"] = toJson(w.frame);
  return j;
}

NetDocument netDocumentFromJson(const Json& j) {
  if (field(j, "formatVersion") != kFormatVersion) throw InvalidInput("net document: unsupported formatVersion");
  if (field(j, "variables") != 6) throw InvalidInput("net document: variables must be 6");
  const auto& qs = field(j, "quadrics");
  if (!qs.is_array() || qs.size() != 3) throw InvalidInput("net document: expected three quadrics");
  std::optional<RatMatrix> frame;
  if (j.contains("frame")) {
    frame = matrixFromJson(j.at("frame"), 6, 6);
    if (isZero(determinant(*frame))) throw InvalidInput("net document: frame is singular");
  }
  return {Net(quadricFromJson(qs[0]), quadricFromJson(qs[1]), quadricFromJson(qs[2])), std::move(frame)};
}

Json toJson(const NetDocument& doc) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["variables"] = 6;
  Json qs = Json::array();
  for (const auto& q : doc.net.quadrics()) {
    Json terms = Json::array();
    // descending lex, matching the text form
    for (auto it = q.terms().rbegin(); it != q.terms().rend(); ++it) {
      Json t;
      t["monomial"] = std::vector<int>(it->first.exp.begin(), it->first.exp.begin() + 6);
      t["coefficient"] = toText(it->second);
      terms.push_back(std::move(t));
    }
    qs.push_back(std::move(terms));
  }
  j["quadrics"] = std::move(qs);
  if (doc.frame) j["frame"] = toJson(*doc.frame);
  return j;
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NetDocument readNetDocument(const std::string& path) {
  const auto text = readTextFile(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path + "': " + e.what());
  }
  return netDocumentFromJson(j);
}

} // namespace quadnet
