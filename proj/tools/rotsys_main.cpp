#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rotsys/base.hpp"
#include "rotsys/claims.hpp"
#include "rotsys/constructions.hpp"
#include "rotsys/drawing.hpp"
#include "rotsys/io.hpp"
#include "rotsys/map.hpp"
#include "rotsys/ramsey.hpp"
#include "rotsys/reference.hpp"
#include "rotsys/solver.hpp"

namespace {

using rotsys::json;

// Exit codes: 0 success, 1 claim/validation failure, 2 input error, 3 resource truncation.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;
constexpr int kTruncated = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rotsys::input_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rotsys::input_error("cannot open " + path + " for writing");
  out << text;
}

// builtin:pi_n:N | builtin:k2n:N | builtin:complete:SIZE:INDEX | builtin:fig1 | file path | -
rotsys::RotationSystem load_system(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(spec.substr(8));
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    auto num_at = [&](size_t i) {
      if (i >= parts.size()) throw rotsys::input_error("builtin spec " + spec + " needs a number");
      try {
        return std::stoi(parts[i]);
      } catch (const std::exception&) {
        throw rotsys::input_error("bad number in builtin spec " + spec);
      }
    };
    if (parts.empty()) throw rotsys::input_error("empty builtin spec");
    if (parts[0] == "fig1") return rotsys::fig1_system();
    if (parts[0] == "pi_n") return rotsys::pi_n(num_at(1));
    if (parts[0] == "k2n") return rotsys::k2n_restriction(num_at(1));
    if (parts[0] == "complete") {
      auto all = rotsys::complete_systems(num_at(1));
      int idx = num_at(2);
      if (idx < 0 || idx >= static_cast<int>(all.size()))
        throw rotsys::input_error("complete system index out of range");
      return all[idx];
    }
    throw rotsys::input_error("unknown builtin " + parts[0]);
  }
  return rotsys::system_from_json(rotsys::parse_json(read_input(spec)));
}

rotsys::Monotone parse_mono(const std::string& v) {
  if (v == "inc" || v == "increasing") return rotsys::Monotone::increasing;
  if (v == "dec" || v == "decreasing") return rotsys::Monotone::decreasing;
  if (v == "non" || v == "non-monotone") return rotsys::Monotone::non_monotone;
  throw rotsys::input_error("bad order value " + v + " (want inc|dec|non-monotone)");
}

rotsys::UniformSign parse_usign(const std::string& v) {
  if (v == "pos" || v == "positive") return rotsys::UniformSign::positive;
  if (v == "neg" || v == "negative") return rotsys::UniformSign::negative;
  if (v == "mixed") return rotsys::UniformSign::mixed;
  throw rotsys::input_error("bad sign value " + v + " (want positive|negative|mixed)");
}

rotsys::UniformDirection parse_dir(const std::string& v) {
  if (v == "fwd" || v == "forward") return rotsys::UniformDirection::forward;
  if (v == "bwd" || v == "backward") return rotsys::UniformDirection::backward;
  if (v == "mixed") return rotsys::UniformDirection::mixed;
  throw rotsys::input_error("bad direction value " + v + " (want forward|backward|mixed)");
}

const char* mono_name(rotsys::Monotone m) {
  switch (m) {
    case rotsys::Monotone::increasing: return "increasing";
    case rotsys::Monotone::decreasing: return "decreasing";
    default: return "non-monotone";
  }
}

const char* usign_name(rotsys::UniformSign s) {
  switch (s) {
    case rotsys::UniformSign::positive: return "positive";
    case rotsys::UniformSign::negative: return "negative";
    default: return "mixed";
  }
}

const char* dir_name(rotsys::UniformDirection d) {
  switch (d) {
    case rotsys::UniformDirection::forward: return "forward";
    case rotsys::UniformDirection::backward: return "backward";
    default: return "mixed";
  }
}

json profile1_json(const rotsys::OneDrawingProfile& p) {
  return {{"sign", usign_name(p.sign)},         {"direction", dir_name(p.direction)},
          {"blue", mono_name(p.blue)},          {"red", mono_name(p.red)},
          {"blue_vacuous", p.blue_vacuous},     {"red_vacuous", p.red_vacuous}};
}

json profile2_json(const rotsys::TwoDrawingProfile& p) {
  return {{"ahead_first", p.ahead_first},
          {"ahead_order", mono_name(p.ahead_order)},
          {"behind_order", mono_name(p.behind_order)},
          {"ahead_sign", usign_name(p.ahead_sign)},
          {"behind_sign", usign_name(p.behind_sign)},
          {"b1_order", mono_name(p.b1_order)},
          {"bn_order", mono_name(p.bn_order)}};
}

// "ell=K" or "profile:key=value,...". One-drawing keys: sign, direction, blue, red. Two-drawing
// keys: ahead_first, ahead_order, behind_order, ahead_sign, behind_sign, b1_order, bn_order.
void apply_predicate(rotsys::SearchConfig& cfg, const std::string& spec) {
  if (spec.rfind("ell=", 0) == 0) {
    try {
      cfg.ell = std::stoi(spec.substr(4));
    } catch (const std::exception&) {
      throw rotsys::input_error("bad predicate " + spec);
    }
    return;
  }
  if (spec.rfind("profile:", 0) != 0)
    throw rotsys::input_error("bad predicate " + spec + " (want ell=K or profile:key=value,...)");
  std::map<std::string, std::string> kv;
  std::stringstream ss(spec.substr(8));
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos) throw rotsys::input_error("bad profile entry " + item);
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  if (kv.empty()) throw rotsys::input_error("empty profile predicate");
  static const std::set<std::string> one_keys{"sign", "direction", "blue", "red"};
  static const std::set<std::string> two_keys{"ahead_first", "ahead_order", "behind_order",
                                              "ahead_sign",  "behind_sign", "b1_order",
                                              "bn_order"};
  bool any_one = false, any_two = false;
  for (const auto& [k, v] : kv) {
    if (one_keys.count(k))
      any_one = true;
    else if (two_keys.count(k))
      any_two = true;
    else
      throw rotsys::input_error("unknown profile key " + k);
  }
  if (any_one && any_two)
    throw rotsys::input_error("profile mixes one-drawing and two-drawing keys");
  if (any_one) {
    rotsys::OneDrawingProfile want;
    bool has_sign = kv.count("sign"), has_dir = kv.count("direction");
    bool has_blue = kv.count("blue"), has_red = kv.count("red");
    if (has_sign) want.sign = parse_usign(kv["sign"]);
    if (has_dir) want.direction = parse_dir(kv["direction"]);
    if (has_blue) want.blue = parse_mono(kv["blue"]);
    if (has_red) want.red = parse_mono(kv["red"]);
    cfg.predicate = [=](const rotsys::Drawing& d) {
      try {
        rotsys::OneDrawingProfile p = rotsys::classify_1(d);
        return (!has_sign || p.sign == want.sign) && (!has_dir || p.direction == want.direction) &&
               (!has_blue || p.blue == want.blue) && (!has_red || p.red == want.red);
      } catch (const rotsys::input_error&) {
        return false;
      }
    };
    return;
  }
  rotsys::TwoDrawingProfile want;
  std::map<std::string, bool> has;
  for (const std::string& k : two_keys) has[k] = kv.count(k) > 0;
  if (has["ahead_first"]) {
    if (kv["ahead_first"] != "true" && kv["ahead_first"] != "false")
      throw rotsys::input_error("ahead_first wants true or false");
    want.ahead_first = kv["ahead_first"] == "true";
  }
  if (has["ahead_order"]) want.ahead_order = parse_mono(kv["ahead_order"]);
  if (has["behind_order"]) want.behind_order = parse_mono(kv["behind_order"]);
  if (has["ahead_sign"]) want.ahead_sign = parse_usign(kv["ahead_sign"]);
  if (has["behind_sign"]) want.behind_sign = parse_usign(kv["behind_sign"]);
  if (has["b1_order"]) want.b1_order = parse_mono(kv["b1_order"]);
  if (has["bn_order"]) want.bn_order = parse_mono(kv["bn_order"]);
  cfg.predicate = [=](const rotsys::Drawing& d) {
    try {
      rotsys::TwoDrawingProfile p = rotsys::classify_2(d);
      auto mono_ok = [&](const char* k, rotsys::Monotone a, rotsys::Monotone b) {
        return !has.at(k) || a == b;
      };
      auto sign_ok = [&](const char* k, rotsys::UniformSign a, rotsys::UniformSign b) {
        return !has.at(k) || a == b;
      };
      return (!has.at("ahead_first") || p.ahead_first == want.ahead_first) &&
             mono_ok("ahead_order", p.ahead_order, want.ahead_order) &&
             mono_ok("behind_order", p.behind_order, want.behind_order) &&
             sign_ok("ahead_sign", p.ahead_sign, want.ahead_sign) &&
             sign_ok("behind_sign", p.behind_sign, want.behind_sign) &&
             mono_ok("b1_order", p.b1_order, want.b1_order) &&
             mono_ok("bn_order", p.bn_order, want.bn_order);
    } catch (const rotsys::input_error&) {
      return false;
    }
  };
}

// "4..10" | "4,7,10" | "4"
std::vector<int> parse_range(const std::string& spec) {
  std::vector<int> out;
  auto num = [](const std::string& s) {
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw rotsys::input_error("bad n value \"" + s + "\"");
    }
  };
  size_t dots = spec.find("..");
  if (dots != std::string::npos) {
    int lo = num(spec.substr(0, dots)), hi = num(spec.substr(dots + 2));
    if (lo > hi) throw rotsys::input_error("empty n range " + spec);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(num(item));
  if (out.empty()) throw rotsys::input_error("empty n list");
  return out;
}

json quad_json(const rotsys::CountQuad& q) {
  return {{"vertices", q.vertices}, {"edges", q.edges}, {"faces", q.faces}, {"genus", q.genus}};
}

// Distinguishes the three fixture kinds by their required keys.
enum class InputKind { drawing, map, system };

InputKind detect_kind(const json& j) {
  if (!j.is_object()) throw rotsys::input_error("/: expected an object");
  if (j.contains("alpha")) return InputKind::map;
  if (j.contains("elements")) return InputKind::system;
  if (j.contains("edges")) return InputKind::drawing;
  throw rotsys::input_error("/: not a drawing, map, or system fixture");
}

int cmd_gen(const std::string& what, int n, const std::string& spine, const std::string& order,
            const std::string& sign, const std::string& system_spec, const std::string& dsign,
            const std::string& ddir, const std::string& dblue, const std::string& dred,
            const json& profile_flags, int index, const std::string& format,
            const std::string& out) {
  json j;
  rotsys::CombinatorialMap map_fixture;
  bool have_map = false;
  rotsys::Drawing drawing_fixture;
  bool have_drawing = false;
  if (what == "pi_n") {
    j = rotsys::system_to_json(rotsys::pi_n(n));
  } else if (what == "k2n") {
    j = rotsys::system_to_json(rotsys::k2n_restriction(n));
  } else if (what == "fig1") {
    j = rotsys::system_to_json(rotsys::fig1_system());
  } else if (what == "complete") {
    auto all = rotsys::complete_systems(n);
    if (index < 0 || index >= static_cast<int>(all.size()))
      throw rotsys::input_error("complete system index out of range");
    j = rotsys::system_to_json(all[index]);
  } else if (what == "embedding") {
    drawing_fixture = rotsys::zero_drawing_embedding(load_system(system_spec));
    have_drawing = true;
  } else if (what == "star") {
    map_fixture = rotsys::star_restriction(
        n, spine == "red" ? rotsys::Spine::red : rotsys::Spine::blue,
        order == "dec" ? rotsys::SpineOrder::dec : rotsys::SpineOrder::inc,
        sign == "neg" ? rotsys::SpineSign::neg : rotsys::SpineSign::pos);
    have_map = true;
  } else if (what == "gadget52") {
    map_fixture = rotsys::gadget_claim52(n);
    have_map = true;
  } else if (what == "gadget73") {
    map_fixture = rotsys::gadget_claim73(n);
    have_map = true;
  } else if (what == "witness1") {
    drawing_fixture = rotsys::witness_1drawing(
        n, parse_usign(dsign) == rotsys::UniformSign::negative ? rotsys::Sign::negative
                                                               : rotsys::Sign::positive,
        parse_dir(ddir), parse_mono(dblue), parse_mono(dred));
    have_drawing = true;
  } else if (what == "witness2") {
    rotsys::TwoDrawingProfile p = rotsys::uniform_profile();
    if (profile_flags.contains("ahead_first")) p.ahead_first = profile_flags["ahead_first"];
    if (profile_flags.contains("ahead_order"))
      p.ahead_order = parse_mono(profile_flags["ahead_order"]);
    if (profile_flags.contains("behind_order"))
      p.behind_order = parse_mono(profile_flags["behind_order"]);
    if (profile_flags.contains("ahead_sign"))
      p.ahead_sign = parse_usign(profile_flags["ahead_sign"]);
    if (profile_flags.contains("behind_sign"))
      p.behind_sign = parse_usign(profile_flags["behind_sign"]);
    if (profile_flags.contains("b1_order")) p.b1_order = parse_mono(profile_flags["b1_order"]);
    if (profile_flags.contains("bn_order")) p.bn_order = parse_mono(profile_flags["bn_order"]);
    drawing_fixture = rotsys::witness_2drawing(n, p);
    have_drawing = true;
  } else {
    throw rotsys::input_error("unknown fixture " + what);
  }
  if (format == "dot") {
    if (have_map)
      write_output(out, rotsys::to_dot(map_fixture));
    else if (have_drawing)
      write_output(out, rotsys::to_dot(rotsys::planarize(drawing_fixture)));
    else
      throw rotsys::input_error("dot output needs a map or drawing fixture");
    return kOk;
  }
  if (have_map) j = rotsys::map_to_json(map_fixture);
  if (have_drawing) j = rotsys::drawing_to_json(drawing_fixture);
  write_output(out, rotsys::canonical_dump(j));
  return kOk;
}

int cmd_validate(const std::string& input) {
  json j = rotsys::parse_json(read_input(input));
  InputKind kind = detect_kind(j);
  try {
    if (kind == InputKind::map) {
      rotsys::map_from_json(j);
      std::cout << "map ok\n";
    } else if (kind == InputKind::system) {
      rotsys::system_from_json(j);
      std::cout << "system ok\n";
    } else {
      rotsys::Drawing d = rotsys::drawing_from_json(j);
      auto viol = rotsys::validate_simple(d);
      for (const auto& v : viol) std::cerr << v.code << ": " << v.message << "\n";
      if (!viol.empty()) return kFailure;
      std::cout << "drawing ok\n";
    }
  } catch (const rotsys::structural_error& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_classify(const std::string& input, const std::string& out) {
  rotsys::Drawing d = rotsys::drawing_from_json(rotsys::parse_json(read_input(input)));
  json j;
  auto ell = rotsys::classify_ell(d);
  j["ell"] = ell ? json(*ell) : json(nullptr);
  try {
    j["one_drawing"] = profile1_json(rotsys::classify_1(d));
  } catch (const rotsys::input_error&) {
  }
  try {
    j["two_drawing"] = profile2_json(rotsys::classify_2(d));
  } catch (const rotsys::input_error&) {
  }
  write_output(out, rotsys::canonical_dump(j));
  return kOk;
}

int cmd_extract(const std::string& input, int pipeline, const std::string& out) {
  rotsys::Drawing d = rotsys::drawing_from_json(rotsys::parse_json(read_input(input)));
  rotsys::Drawing result;
  std::vector<std::string> log;
  if (pipeline == 1) {
    rotsys::Pipeline1Result r = rotsys::pipeline_1(d);
    result = std::move(r.drawing);
    log = std::move(r.log);
    log.push_back(std::string("profile: sign=") + usign_name(r.profile.sign) +
                  " direction=" + dir_name(r.profile.direction) +
                  " blue=" + mono_name(r.profile.blue) + " red=" + mono_name(r.profile.red));
  } else if (pipeline == 2) {
    rotsys::Pipeline2Result r = rotsys::pipeline_2(d);
    result = std::move(r.drawing);
    log = std::move(r.log);
    log.push_back(std::string("profile: ahead_first=") +
                  (r.profile.ahead_first ? "true" : "false") +
                  " ahead_order=" + mono_name(r.profile.ahead_order) +
                  " behind_order=" + mono_name(r.profile.behind_order) +
                  " ahead_sign=" + usign_name(r.profile.ahead_sign) +
                  " behind_sign=" + usign_name(r.profile.behind_sign) +
                  " b1_order=" + mono_name(r.profile.b1_order) +
                  " bn_order=" + mono_name(r.profile.bn_order));
  } else {
    throw rotsys::input_error("pipeline must be 1 or 2");
  }
  for (const std::string& line : log) std::cerr << line << "\n";
  write_output(out, rotsys::canonical_dump(rotsys::drawing_to_json(result)));
  return kOk;
}

int cmd_crg(const std::string& system_spec, int max_crossings, int genus_budget,
            const std::string& predicate, bool canonicalize, long long max_nodes, int jobs,
            const std::string& emit_witness, const std::string& out) {
  rotsys::RotationSystem s = load_system(system_spec);
  rotsys::SearchConfig cfg;
  if (max_crossings >= 0) cfg.max_crossings = max_crossings;
  if (genus_budget >= 0) cfg.genus_budget = genus_budget;
  if (!predicate.empty()) apply_predicate(cfg, predicate);
  cfg.canonicalize = canonicalize;
  if (max_nodes >= 0) cfg.max_nodes = max_nodes;
  cfg.jobs = jobs;
  rotsys::CrgResult r = rotsys::crossing_genus(s, cfg);
  json j;
  j["genus"] = r.genus ? json(*r.genus) : json(nullptr);
  j["exceeds_budget"] = r.exceeds_budget;
  j["upper_bound_only"] = r.upper_bound_only;
  j["truncated"] = r.truncated;
  j["explored"] = r.explored;
  j["witness_crossings"] =
      r.witness ? json(static_cast<int>(r.witness->crossings.size())) : json(nullptr);
  write_output(out, rotsys::canonical_dump(j));
  if (!emit_witness.empty()) {
    if (!r.witness) throw rotsys::input_error("no witness to emit");
    write_output(emit_witness, rotsys::canonical_dump(rotsys::drawing_to_json(*r.witness)));
  }
  return r.truncated ? kTruncated : kOk;
}

int cmd_claims(const std::string& claim, const std::string& n_spec, int jobs,
               const std::string& format, const std::string& out) {
  std::vector<std::string> ids =
      claim == "all" ? rotsys::claim_ids() : std::vector<std::string>{claim};
  json rows = json::array();
  bool all_pass = true, had_input_error = false;
  std::ostringstream table;
  for (const std::string& id : ids) {
    std::vector<int> ns =
        n_spec.empty() ? rotsys::claim_default_ns(id) : parse_range(n_spec);
    for (int n : ns) {
      std::vector<rotsys::ClaimReport> part;
      try {
        part = rotsys::run_claim(id, {n}, jobs);
      } catch (const rotsys::input_error& e) {
        rows.push_back({{"claim", id}, {"n", n}, {"error", e.what()}});
        table << id << " n=" << n << " error: " << e.what() << "\n";
        had_input_error = true;
        continue;
      }
      for (const rotsys::ClaimReport& r : part) {
        rows.push_back({{"claim", r.claim},
                        {"n", r.n},
                        {"variant", r.variant},
                        {"expected", quad_json(r.expected)},
                        {"computed", quad_json(r.computed)},
                        {"pass", r.pass},
                        {"detail", r.detail}});
        all_pass = all_pass && r.pass;
        table << r.claim << " n=" << r.n << (r.variant.empty() ? "" : " " + r.variant) << ": "
              << (r.pass ? "pass" : "FAIL") << (r.detail.empty() ? "" : " (" + r.detail + ")")
              << "\n";
      }
    }
  }
  write_output(out, format == "json" ? rotsys::canonical_dump(rows) : table.str());
  if (had_input_error) return kInputError;
  return all_pass ? kOk : kFailure;
}

int cmd_export(const std::string& input, const std::string& format, const std::string& out) {
  json j = rotsys::parse_json(read_input(input));
  InputKind kind = detect_kind(j);
  rotsys::CombinatorialMap m;
  if (kind == InputKind::map)
    m = rotsys::map_from_json(j);
  else if (kind == InputKind::drawing)
    m = rotsys::planarize(rotsys::drawing_from_json(j));
  else
    m = rotsys::planarize(rotsys::zero_drawing_embedding(rotsys::system_from_json(j)));
  if (format == "dot")
    write_output(out, rotsys::to_dot(m));
  else
    write_output(out, rotsys::canonical_dump(rotsys::map_to_json(m)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotation system drawing toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "emit a builtin fixture");
  std::string gen_what, gen_spine = "blue", gen_order = "inc", gen_sign = "pos";
  std::string gen_system = "-", gen_format = "json", gen_out = "-";
  std::string w1_sign = "positive", w1_dir = "forward", w1_blue = "increasing",
              w1_red = "increasing";
  std::string p2_ahead_first, p2_ahead_order, p2_behind_order, p2_ahead_sign, p2_behind_sign,
      p2_b1_order, p2_bn_order;
  int gen_n = 3, gen_index = 0;
  gen->add_option("what", gen_what,
                  "pi_n|k2n|fig1|complete|embedding|star|gadget52|gadget73|witness1|witness2")
      ->required();
  gen->add_option("--n", gen_n, "size parameter");
  gen->add_option("--index", gen_index, "complete system index");
  gen->add_option("--spine", gen_spine, "blue|red")->check(CLI::IsMember({"blue", "red"}));
  gen->add_option("--order", gen_order, "inc|dec")->check(CLI::IsMember({"inc", "dec"}));
  gen->add_option("--sign", gen_sign, "pos|neg")->check(CLI::IsMember({"pos", "neg"}));
  gen->add_option("--system", gen_system, "system fixture (file|-|builtin:...) for embedding");
  gen->add_option("--witness-sign", w1_sign, "witness1 sign");
  gen->add_option("--direction", w1_dir, "witness1 direction");
  gen->add_option("--blue-order", w1_blue, "witness1 blue order");
  gen->add_option("--red-order", w1_red, "witness1 red order");
  gen->add_option("--ahead-first", p2_ahead_first, "witness2 flag (true|false)");
  gen->add_option("--ahead-order", p2_ahead_order, "witness2 order");
  gen->add_option("--behind-order", p2_behind_order, "witness2 order");
  gen->add_option("--ahead-sign", p2_ahead_sign, "witness2 sign");
  gen->add_option("--behind-sign", p2_behind_sign, "witness2 sign");
  gen->add_option("--b1-order", p2_b1_order, "witness2 order");
  gen->add_option("--bn-order", p2_bn_order, "witness2 order");
  gen->add_option("--format", gen_format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
  gen->add_option("--out", gen_out, "output path (- for stdout)");

  // validate
  auto* validate = app.add_subcommand("validate", "check a fixture");
  std::string val_input = "-";
  validate->add_option("input", val_input, "fixture path (- for stdin)");

  // classify
  auto* classify = app.add_subcommand("classify", "ell value and profiles of a drawing");
  std::string cls_input = "-", cls_out = "-";
  classify->add_option("input", cls_input, "drawing path (- for stdin)");
  classify->add_option("--out", cls_out, "output path");

  // extract
  auto* extract = app.add_subcommand("extract", "run an extraction pipeline");
  std::string ext_input = "-", ext_out = "-";
  int ext_pipeline = 0;
  extract->add_option("input", ext_input, "drawing path (- for stdin)");
  extract->add_option("--pipeline", ext_pipeline, "1|2")->required();
  extract->add_option("--out", ext_out, "output path");

  // crg
  auto* crg = app.add_subcommand("crg", "crossing genus search");
  std::string crg_system, crg_predicate, crg_witness, crg_out = "-";
  int crg_cap = -1, crg_budget = -1, crg_jobs = 1;
  long long crg_nodes = -1;
  bool crg_canon = false;
  crg->add_option("--system", crg_system, "file|-|builtin:pi_n:N|builtin:k2n:N|builtin:fig1")
      ->required();
  crg->add_option("--max-crossings", crg_cap, "crossing cap");
  crg->add_option("--genus-budget", crg_budget, "genus cap");
  crg->add_option("--predicate", crg_predicate, "ell=K or profile:key=value,...");
  crg->add_flag("--canonicalize", crg_canon, "dedupe isomorphic partial states");
  crg->add_option("--max-nodes", crg_nodes, "search node cap");
  crg->add_option("--jobs", crg_jobs, "worker threads");
  crg->add_option("--emit-witness", crg_witness, "write the witness drawing here");
  crg->add_option("--out", crg_out, "output path");

  // claims
  auto* claims = app.add_subcommand("claims", "run the claims catalog");
  std::string clm_claim = "all", clm_n, clm_format = "json", clm_out = "-";
  int clm_jobs = 1;
  claims->add_option("--claim", clm_claim, "claim id or all");
  claims->add_option("--n", clm_n, "n range: 4..10 or 4,7,10");
  claims->add_option("--jobs", clm_jobs, "worker threads");
  claims->add_option("--format", clm_format, "json|table")
      ->check(CLI::IsMember({"json", "table"}));
  claims->add_option("--out", clm_out, "output path");

  // export
  auto* exp = app.add_subcommand("export", "re-emit a fixture as canonical JSON or DOT");
  std::string exp_input = "-", exp_format = "json", exp_out = "-";
  exp->add_option("input", exp_input, "fixture path (- for stdin)");
  exp->add_option("--format", exp_format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
  bool exp_dot = false;
  exp->add_flag("--dot", exp_dot, "shorthand for --format dot");
  exp->add_option("--out", exp_out, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      json pf = json::object();
      if (!p2_ahead_first.empty()) {
        if (p2_ahead_first != "true" && p2_ahead_first != "false")
          throw rotsys::input_error("--ahead-first wants true or false");
        pf["ahead_first"] = p2_ahead_first == "true";
      }
      if (!p2_ahead_order.empty()) pf["ahead_order"] = p2_ahead_order;
      if (!p2_behind_order.empty()) pf["behind_order"] = p2_behind_order;
      if (!p2_ahead_sign.empty()) pf["ahead_sign"] = p2_ahead_sign;
      if (!p2_behind_sign.empty()) pf["behind_sign"] = p2_behind_sign;
      if (!p2_b1_order.empty()) pf["b1_order"] = p2_b1_order;
      if (!p2_bn_order.empty()) pf["bn_order"] = p2_bn_order;
      return cmd_gen(gen_what, gen_n, gen_spine, gen_order, gen_sign, gen_system, w1_sign,
                     w1_dir, w1_blue, w1_red, pf, gen_index, gen_format, gen_out);
    }
    if (validate->parsed()) return cmd_validate(val_input);
    if (classify->parsed()) return cmd_classify(cls_input, cls_out);
    if (extract->parsed()) return cmd_extract(ext_input, ext_pipeline, ext_out);
    if (crg->parsed())
      return cmd_crg(crg_system, crg_cap, crg_budget, crg_predicate, crg_canon, crg_nodes,
                     crg_jobs, crg_witness, crg_out);
    if (claims->parsed()) return cmd_claims(clm_claim, clm_n, clm_jobs, clm_format, clm_out);
    if (exp->parsed()) return cmd_export(exp_input, exp_dot ? "dot" : exp_format, exp_out);
  } catch (const rotsys::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kTruncated;
  } catch (const rotsys::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const rotsys::structural_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
