#include "liealg/io.hpp"

#include <set>

#include <json.hpp>

namespace liealg {

namespace {

using nlohmann::json;

class PathTracker {
 public:
  bool operator()(int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        enter_element();
        frames_.push_back({true, {}, {}, -1});
        break;
      case json::parse_event_t::array_start:
        enter_element();
        frames_.push_back({false, {}, {}, -1});
        break;
      case json::parse_event_t::key: {
        auto& top = frames_.back();
        top.last_key = parsed.get<std::string>();
        if (!top.keys.insert(top.last_key).second) {
          throw ParseError("duplicate key at " + path());
        }
        break;
      }
      case json::parse_event_t::value:
        enter_element();
        break;
      case json::parse_event_t::object_end:
      case json::parse_event_t::array_end:
        frames_.pop_back();
        break;
    }
    return true;
  }

 private:
  struct Frame {
    bool object;
    std::set<std::string> keys;
    std::string last_key;
    int index;
  };

  void enter_element() {
    if (!frames_.empty() && !frames_.back().object) ++frames_.back().index;
  }

  std::string path() const {
    std::string out;
    for (const auto& f : frames_) out += "/" + (f.object ? f.last_key : std::to_string(f.index));
    return out;
  }

  std::vector<Frame> frames_;
};

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

void require_keys(const json& object, const std::string& where,
                  std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(where + "/" + key, "unknown key");
  }
}

long long integer_at(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where, "expected an integer");
  return value.get<long long>();
}

FieldSpec parse_field(const json& value) {
  require_keys(value, "/field", {"kind", "p"});
  if (!value.contains("kind") || !value["kind"].is_string()) {
    fail("/field/kind", "expected \"rational\" or \"prime\"");
  }
  const auto kind = value["kind"].get<std::string>();
  if (kind == "rational") {
    if (value.contains("p")) fail("/field/p", "a rational field takes no modulus");
    return FieldSpec::rationals();
  }
  if (kind != "prime") fail("/field/kind", "expected \"rational\" or \"prime\"");
  if (!value.contains("p")) fail("/field", "missing key p");
  const long long p = integer_at(value["p"], "/field/p");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || p >= (1LL << 31)) {
    fail("/field/p", std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec::prime(static_cast<std::uint64_t>(p));
}

int basis_index(std::string_view key, int dim, const std::string& where) {
  bool canonical = !key.empty() && key.size() <= 9 && key.front() != '0';
  for (char ch : key) canonical = canonical && ch >= '0' && ch <= '9';
  if (!canonical) fail(where, "basis index must be a decimal integer without leading zeros");
  const int k = std::stoi(std::string(key));
  if (k > dim) fail(where, "basis index " + std::to_string(k) + " exceeds dim " + std::to_string(dim));
  return k;
}

template <class S>
LieAlgebra<S> parse_body(const json& doc, const FieldSpec& field, int dim, std::string name) {
  std::vector<BracketSpec<S>> brackets;
  std::set<std::pair<int, int>> seen;
  const json& list = doc["brackets"];
  if (!list.is_array()) fail("/brackets", "expected an array");
  for (std::size_t b = 0; b < list.size(); ++b) {
    const std::string where = "/brackets/" + std::to_string(b);
    const json& item = list[b];
    require_keys(item, where, {"lhs", "rhs"});
    if (!item.contains("lhs")) fail(where, "missing key lhs");
    if (!item.contains("rhs")) fail(where, "missing key rhs");
    const json& lhs = item["lhs"];
    if (!lhs.is_array() || lhs.size() != 2) fail(where + "/lhs", "expected [i, j]");
    const long long i = integer_at(lhs[0], where + "/lhs/0");
    const long long j = integer_at(lhs[1], where + "/lhs/1");
    for (int side = 0; side < 2; ++side) {
      const long long v = side == 0 ? i : j;
      if (v < 1 || v > dim) {
        fail(where + "/lhs/" + std::to_string(side),
             "index " + std::to_string(v) + " outside 1.." + std::to_string(dim));
      }
    }
    if (i >= j) fail(where + "/lhs", "pairs must satisfy i < j");
    if (!seen.emplace(i, j).second) {
      fail(where + "/lhs", "duplicate pair [" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
    const json& rhs = item["rhs"];
    if (!rhs.is_object()) fail(where + "/rhs", "expected an object");
    std::vector<std::pair<int, S>> terms;
    for (const auto& [key, value] : rhs.items()) {
      const std::string at = where + "/rhs/" + key;
      const int k = basis_index(key, dim, at);
      if (!value.is_string()) fail(at, "coefficient must be a string");
      try {
        S c = parse_scalar<S>(value.template get<std::string>(), field);
        if (!is_zero(c)) terms.emplace_back(k - 1, std::move(c));
      } catch (const ParseError& e) {
        fail(at, e.what());
      }
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    if (!terms.empty()) {
      brackets.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1), std::move(terms)});
    }
  }
  try {
    return new_algebra<S>(field, dim, std::move(brackets), std::move(name));
  } catch (const NotALieAlgebra& e) {
    fail("/brackets", e.what());
  }
}

}  // namespace

AnyAlgebra parse_document(std::string_view text) {
  json doc;
  try {
    PathTracker tracker;
    doc = json::parse(text.begin(), text.end(), std::ref(tracker));
  } catch (const json::parse_error& e) {
    std::string message = e.what();
    // Drop the library's "[json.exception.parse_error.101] parse error at ...: " prefix.
    if (auto pos = message.find("parse error"); pos != std::string::npos) {
      if (auto colon = message.find(": ", pos); colon != std::string::npos) {
        message = message.substr(colon + 2);
      }
    }
    throw ParseError(line_column(text, e.byte) + ": " + message);
  }
  require_keys(doc, "document", {"name", "dim", "field", "brackets"});
  for (const char* key : {"dim", "field", "brackets"}) {
    if (!doc.contains(key)) fail("document", std::string("missing key ") + key);
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("/name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  const long long dim = integer_at(doc["dim"], "/dim");
  if (dim < 0 || dim > 100000) fail("/dim", "dimension out of range");
  const FieldSpec field = parse_field(doc["field"]);
  if (field.is_rational()) {
    return parse_body<Rational>(doc, field, static_cast<int>(dim), std::move(name));
  }
  return parse_body<Zp>(doc, field, static_cast<int>(dim), std::move(name));
}

template <class S>
std::string render_document(const LieAlgebra<S>& lie) {
  nlohmann::ordered_json doc;
  if (!lie.name().empty()) doc["name"] = lie.name();
  doc["dim"] = lie.dim();
  nlohmann::ordered_json field;
  if (lie.field().is_rational()) {
    field["kind"] = "rational";
  } else {
    field["kind"] = "prime";
    field["p"] = lie.field().modulus();
  }
  doc["field"] = field;
  doc["brackets"] = nlohmann::ordered_json::array();
  for (const auto& e : lie.entries()) {
    nlohmann::ordered_json item;
    item["lhs"] = {e.i + 1, e.j + 1};
    nlohmann::ordered_json rhs = nlohmann::ordered_json::object();
    for (const auto& [k, c] : e.value) rhs[std::to_string(k + 1)] = render_scalar(c);
    item["rhs"] = rhs;
    doc["brackets"].push_back(item);
  }
  return doc.dump(2) + "\n";
}

std::string render_document(const AnyAlgebra& lie) {
  return std::visit([](const auto& a) { return render_document(a); }, lie);
}

template std::string render_document(const LieAlgebra<Rational>&);
template std::string render_document(const LieAlgebra<Zp>&);

}  // namespace liealg
