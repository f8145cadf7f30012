#include "tamagawa/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tamagawa/errors.hpp"

namespace tamagawa {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw InvalidInput("unknown config key '" + where + key + "'");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw InvalidInput("missing config key '" + where + key + "'");
  return obj.at(key);
}

BigInt to_bigint(const json& v, const std::string& what) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw InvalidInput(what + ": '" + s + "' is not an integer");
    }
    return BigInt(s);
  }
  throw InvalidInput(what + " must be an integer");
}

int to_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InvalidInput(what + " must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) throw InvalidInput(what + " is out of range");
  return static_cast<int>(x);
}

std::vector<BigInt> to_bigint_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw InvalidInput(what + " must be a list");
  std::vector<BigInt> out;
  for (const auto& x : v) out.push_back(to_bigint(x, what));
  return out;
}

Isogeny parse_isogeny(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "simply_connected") return Isogeny::simply_connected();
    if (s == "adjoint") return Isogeny::adjoint();
    throw InvalidInput("group.isogeny must be simply_connected, adjoint or {quotient_order: k}");
  }
  if (!v.is_object()) throw InvalidInput("group.isogeny has the wrong type");
  reject_unknown(v, {"quotient_order", "d_even_tag"}, "group.isogeny.");
  const int k = to_int(require(v, "quotient_order", "group.isogeny."), "group.isogeny.quotient_order");
  std::optional<DEvenTag> tag;
  if (v.contains("d_even_tag")) {
    const auto& t = v.at("d_even_tag");
    if (t == "special_orthogonal") {
      tag = DEvenTag::special_orthogonal;
    } else if (t == "half_spin") {
      tag = DEvenTag::half_spin;
    } else {
      throw InvalidInput("group.isogeny.d_even_tag must be special_orthogonal or half_spin");
    }
  }
  return Isogeny::quotient(k, tag);
}

}  // namespace

Config parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("config must be a JSON object");
  reject_unknown(doc,
                 {"group", "curve", "euler_truncation", "oracle", "base_change_check_max", "weyl_bound"},
                 "");

  Config cfg;
  const json& group = require(doc, "group", "");
  if (!group.is_object()) throw InvalidInput("group must be an object");
  reject_unknown(group, {"type", "rank", "isogeny"}, "group.");
  const json& letter = require(group, "type", "group.");
  if (!letter.is_string() || letter.get<std::string>().size() != 1) {
    throw InvalidInput("group.type must be a single letter A-G");
  }
  cfg.type = DynkinType::make(letter.get<std::string>()[0], to_int(require(group, "rank", "group."), "group.rank"));
  cfg.isogeny = group.contains("isogeny") ? parse_isogeny(group.at("isogeny")) : Isogeny::simply_connected();

  const json& curve = require(doc, "curve", "");
  if (!curve.is_object()) throw InvalidInput("curve must be an object");
  reject_unknown(curve, {"q", "genus", "l_coeffs", "point_counts"}, "curve.");
  cfg.curve.q = to_bigint(require(curve, "q", "curve."), "curve.q");
  cfg.curve.genus = to_int(require(curve, "genus", "curve."), "curve.genus");
  if (curve.contains("l_coeffs") == curve.contains("point_counts")) {
    throw InvalidInput("curve needs exactly one of l_coeffs or point_counts");
  }
  if (curve.contains("l_coeffs")) {
    cfg.curve.l_coeffs = to_bigint_list(curve.at("l_coeffs"), "curve.l_coeffs");
  } else {
    cfg.curve.point_counts = to_bigint_list(curve.at("point_counts"), "curve.point_counts");
  }

  if (doc.contains("euler_truncation")) {
    cfg.euler_truncation = to_int(doc.at("euler_truncation"), "euler_truncation");
    if (cfg.euler_truncation < 1) throw InvalidInput("euler_truncation must be at least 1");
  }
  if (doc.contains("oracle")) {
    const json& oracle = doc.at("oracle");
    if (!oracle.is_object()) throw InvalidInput("oracle must be an object");
    reject_unknown(oracle, {"enabled", "cutoff"}, "oracle.");
    if (oracle.contains("enabled")) {
      if (!oracle.at("enabled").is_boolean()) throw InvalidInput("oracle.enabled must be a boolean");
      cfg.oracle_enabled = oracle.at("enabled").get<bool>();
    }
    if (oracle.contains("cutoff")) {
      cfg.oracle_cutoff = to_int(oracle.at("cutoff"), "oracle.cutoff");
      if (cfg.oracle_cutoff < 0) throw InvalidInput("oracle.cutoff must be non-negative");
    }
  }
  if (doc.contains("base_change_check_max")) {
    cfg.base_change_check_max = to_int(doc.at("base_change_check_max"), "base_change_check_max");
    if (cfg.base_change_check_max < 1) throw InvalidInput("base_change_check_max must be at least 1");
  }
  if (doc.contains("weyl_bound")) {
    const json& b = doc.at("weyl_bound");
    if (!b.is_number_unsigned() || b.get<std::uint64_t>() == 0) {
      throw InvalidInput("weyl_bound must be a positive integer");
    }
    cfg.weyl_bound = b.get<std::uint64_t>();
  }
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace tamagawa
