/*
 * Copyright (C) 2026 The angvel authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "angvel/scenario_file.hpp"

#include <cmath>
#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "angvel/error.hpp"
#include "angvel/table.hpp"

namespace angvel {

namespace {

const std::set<std::string, std::less<>> kKnownKeys{
    "inertia_diag", "inertia_full", "inertia_min", "inertia_max", "omega0",  "omega_max",
    "R0",           "rhat1_0",      "rhat2_0",     "k1",          "k2",      "l_mode",
    "l1",           "l2",           "l_margin",    "xi0",         "torque",  "dt",
    "t_final",      "record_every", "omega_hat_bound"};

struct Entry {
  std::vector<std::string> tokens;
  int line{0};
};

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

class Entries {
 public:
  explicit Entries(std::string_view text) {
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      start = end + 1;
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;

      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
      }
      const std::string key{trim(line.substr(0, eq))};
      if (!kKnownKeys.contains(key)) {
        throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      }
      if (map_.contains(key)) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
      }
      auto tokens = tokenize(line.substr(eq + 1));
      if (tokens.empty()) throw ParseError("line " + std::to_string(line_no) + ": key '" + key + "' has no value");
      map_[key] = Entry{std::move(tokens), line_no};
    }
  }

  bool has(const std::string& key) const { return map_.contains(key); }

  const Entry& get(const std::string& key) const {
    const auto it = map_.find(key);
    if (it == map_.end()) throw ParseError("missing required key '" + key + "'");
    return it->second;
  }

  std::vector<double> numbers(const std::string& key, std::size_t count) const {
    const Entry& e = get(key);
    return numbers(key, e.tokens, 0, count);
  }

  static std::vector<double> numbers(const std::string& key, const std::vector<std::string>& tokens,
                                     std::size_t offset, std::size_t count) {
    if (tokens.size() != offset + count) {
      throw ParseError("key '" + key + "' expects " + std::to_string(count) + " value(s), got " +
                       std::to_string(tokens.size() - offset));
    }
    std::vector<double> out;
    for (std::size_t i = offset; i < tokens.size(); ++i) {
      try {
        out.push_back(parse_number(tokens[i]));
      } catch (const ParseError& err) {
        throw ParseError("key '" + key + "': " + err.what());
      }
      if (!std::isfinite(out.back())) throw ParseError("key '" + key + "': values must be finite");
    }
    return out;
  }

  double number(const std::string& key) const { return numbers(key, 1)[0]; }

  Vec3 vec3(const std::string& key) const {
    const auto v = numbers(key, 3);
    return {v[0], v[1], v[2]};
  }

  const std::string& word(const std::string& key) const {
    const Entry& e = get(key);
    if (e.tokens.size() != 1) throw ParseError("key '" + key + "' expects a single word");
    return e.tokens[0];
  }

  void forbid(const std::string& key, const std::string& why) const {
    if (has(key)) throw ParseError("key '" + key + "' is not allowed " + why);
  }

 private:
  std::map<std::string, Entry, std::less<>> map_;
};

Mat3 mat_from(const std::vector<double>& v) {
  Mat3 m;
  std::copy(v.begin(), v.end(), m.m.begin());
  return m;
}

TorqueProfile parse_torque(const Entries& in) {
  const auto& tokens = in.get("torque").tokens;
  const std::string& kind = tokens[0];
  if (kind == "zero") {
    if (tokens.size() != 1) throw ParseError("key 'torque': 'zero' takes no values");
    return ZeroTorque{};
  }
  if (kind == "constant") {
    const auto v = Entries::numbers("torque", tokens, 1, 3);
    return ConstantTorque{{v[0], v[1], v[2]}};
  }
  if (kind == "sine") {
    const auto v = Entries::numbers("torque", tokens, 1, 5);
    return SinusoidTorque{{v[0], v[1], v[2]}, v[3], v[4]};
  }
  throw ParseError("key 'torque': expected 'zero', 'constant' or 'sine', got '" + kind + "'");
}

Scenario build(const Entries& in) {
  Scenario sc;

  Mat3 J;
  if (in.has("inertia_diag") && in.has("inertia_full")) {
    throw ParseError("keys 'inertia_diag' and 'inertia_full' are mutually exclusive");
  } else if (in.has("inertia_diag")) {
    const auto d = in.numbers("inertia_diag", 3);
    J = Mat3::diag(d[0], d[1], d[2]);
  } else if (in.has("inertia_full")) {
    J = mat_from(in.numbers("inertia_full", 9));
  } else {
    throw ParseError("missing required key 'inertia_diag' (or 'inertia_full')");
  }
  const double omega_max = in.number("omega_max");
  std::optional<double> jm, jM;
  if (in.has("inertia_min")) jm = in.number("inertia_min");
  if (in.has("inertia_max")) jM = in.number("inertia_max");
  try {
    sc.params = PhysicalParams::make(J, omega_max, jm, jM);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid inertia/omega_max: ") + e.what());
  }

  sc.omega0 = in.vec3("omega0");
  if (in.has("R0")) {
    const auto& tokens = in.get("R0").tokens;
    sc.R0 = (tokens.size() == 1 && tokens[0] == "identity") ? Mat3::identity()
                                                             : mat_from(in.numbers("R0", 9));
  }
  sc.rhat1_0 = in.vec3("rhat1_0");
  sc.rhat2_0 = in.vec3("rhat2_0");

  sc.gains.k1 = in.number("k1");
  sc.gains.k2 = in.number("k2");
  const std::string& mode = in.word("l_mode");
  if (mode == "constant") {
    in.forbid("l_margin", "with l_mode = constant");
    sc.gains.l_mode = ConstantL{in.number("l1"), in.number("l2")};
  } else if (mode == "theorem") {
    in.forbid("l1", "with l_mode = theorem");
    in.forbid("l2", "with l_mode = theorem");
    sc.gains.l_mode = TheoremL{in.number("l_margin")};
  } else {
    throw ParseError("key 'l_mode': expected 'constant' or 'theorem', got '" + mode + "'");
  }

  if (in.has("xi0")) {
    const auto& tokens = in.get("xi0").tokens;
    if (!(tokens.size() == 1 && tokens[0] == "auto")) sc.xi0 = in.vec3("xi0");
  }
  sc.torque_profile = parse_torque(in);
  sc.dt = in.number("dt");
  sc.t_final = in.number("t_final");

  if (in.has("record_every")) {
    const std::string& tok = in.word("record_every");
    long long v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size() || v < 1 || v > 1'000'000'000) {
      throw ParseError("key 'record_every': expected a positive integer, got '" + tok + "'");
    }
    sc.record_every = static_cast<int>(v);
  }
  sc.omega_hat_bound = in.has("omega_hat_bound") ? in.number("omega_hat_bound") : 2.0 * omega_max;

  try {
    sc.validate();
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid scenario: ") + e.what());
  }
  return sc;
}

std::string join(std::initializer_list<double> vals) {
  std::string out;
  for (double v : vals) {
    if (!out.empty()) out += ' ';
    out += format_number(v);
  }
  return out;
}

std::string join(const Vec3& v) { return join({v.x, v.y, v.z}); }

std::string join(const Mat3& m) {
  std::string out;
  for (double v : m.m) {
    if (!out.empty()) out += ' ';
    out += format_number(v);
  }
  return out;
}

}  // namespace

Scenario parse_scenario(std::string_view text) { return build(Entries(text)); }

std::string dump_scenario(const Scenario& sc) {
  std::ostringstream out;
  const Mat3& J = sc.params.J;
  const bool diagonal = J(0, 1) == 0.0 && J(0, 2) == 0.0 && J(1, 0) == 0.0 && J(1, 2) == 0.0 &&
                        J(2, 0) == 0.0 && J(2, 1) == 0.0;
  if (diagonal) {
    out << "inertia_diag = " << join({J(0, 0), J(1, 1), J(2, 2)}) << '\n';
  } else {
    out << "inertia_full = " << join(J) << '\n';
  }
  out << "inertia_min = " << format_number(sc.params.Jm) << '\n';
  out << "inertia_max = " << format_number(sc.params.JM) << '\n';
  out << "omega_max = " << format_number(sc.params.omega_M) << '\n';
  out << "omega0 = " << join(sc.omega0) << '\n';
  out << "R0 = " << (sc.R0 == Mat3::identity() ? std::string("identity") : join(sc.R0)) << '\n';
  out << "rhat1_0 = " << join(sc.rhat1_0) << '\n';
  out << "rhat2_0 = " << join(sc.rhat2_0) << '\n';
  out << "xi0 = " << (sc.xi0 ? join(*sc.xi0) : std::string("auto")) << '\n';
  out << "k1 = " << format_number(sc.gains.k1) << '\n';
  out << "k2 = " << format_number(sc.gains.k2) << '\n';
  if (const auto* c = std::get_if<ConstantL>(&sc.gains.l_mode)) {
    out << "l_mode = constant\n";
    out << "l1 = " << format_number(c->l1) << '\n';
    out << "l2 = " << format_number(c->l2) << '\n';
  } else {
    out << "l_mode = theorem\n";
    out << "l_margin = " << format_number(std::get<TheoremL>(sc.gains.l_mode).margin) << '\n';
  }
  struct TorqueText {
    std::string operator()(const ZeroTorque&) const { return "zero"; }
    std::string operator()(const ConstantTorque& c) const { return "constant " + join(c.value); }
    std::string operator()(const SinusoidTorque& s) const {
      return "sine " + join(s.amp) + " " + join({s.freq, s.phase});
    }
  };
  out << "torque = " << std::visit(TorqueText{}, sc.torque_profile) << '\n';
  out << "dt = " << format_number(sc.dt) << '\n';
  out << "t_final = " << format_number(sc.t_final) << '\n';
  out << "record_every = " << sc.record_every << '\n';
  out << "omega_hat_bound = " << format_number(sc.omega_hat_bound) << '\n';
  return out.str();
}

}  // namespace angvel
