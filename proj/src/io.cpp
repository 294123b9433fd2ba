#include "polystab/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "polystab/consensus_face.hpp"
#include "polystab/errors.hpp"

namespace polystab::io {
namespace {

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string detail = e.what();
    if (auto pos = detail.find(": "); pos != std::string::npos) detail = detail.substr(pos + 2);
    throw InputError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": invalid JSON: " + detail);
  }
}

[[noreturn]] void fail(std::string_view source, const std::string& path, const std::string& what) {
  throw InputError(std::string(source) + ": " + path + ": " + what);
}

const Json& member(const Json& obj, const char* key, std::string_view source, const std::string& path) {
  if (!obj.is_object()) fail(source, path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(source, path, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t positive_integer(const Json& v, std::string_view source, const std::string& path) {
  if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) fail(source, path, "expected a positive integer");
  return v.get<std::size_t>();
}

Rational entry(const Json& v, std::string_view source, const std::string& path) {
  if (v.is_number_unsigned()) return Rational(Integer(std::to_string(v.get<std::uint64_t>()), 10));
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<std::int64_t>()), 10));
  if (v.is_number_float())
    fail(source, path, "floating-point literal not accepted; write it as a string such as \"0.5\" or \"1/2\"");
  if (!v.is_string()) fail(source, path, "expected an integer or a string holding a rational");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    fail(source, path, e.what());
  }
}

std::vector<std::vector<Rational>> grid(const Json& rows, std::size_t width, std::string_view source,
                                        const std::string& path) {
  if (!rows.is_array()) fail(source, path, "expected an array of rows");
  std::vector<std::vector<Rational>> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    const Json& row = rows[r];
    if (!row.is_array()) fail(source, rp, "expected an array of entries");
    if (row.size() != width)
      fail(source, rp, "has " + std::to_string(row.size()) + " entries, expected " + std::to_string(width));
    std::vector<Rational> values;
    for (std::size_t c = 0; c < row.size(); ++c) values.push_back(entry(row[c], source, rp + "[" + std::to_string(c) + "]"));
    out.push_back(std::move(values));
  }
  return out;
}

std::string row_text(std::span<const Rational> row) {
  std::string s = "[";
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? ", \"" : "\"") + to_string(row[i]) + "\"";
  return s + "]";
}

std::string pattern_text(const FacePattern& p) {
  std::string s;
  for (auto t : p) s += t == Tightness::Minus ? '-' : t == Tightness::Plus ? '+' : '0';
  return s;
}

Json one_based(const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

Json big_integer(const Integer& v) {
  if (v.fits_ulong_p() && sizeof(unsigned long) == sizeof(std::uint64_t)) return Json(std::uint64_t{v.get_ui()});
  return Json(v.get_str());
}

Json levels_json(const std::map<std::size_t, std::size_t>& levels) {
  Json out = Json::object();
  for (const auto& [d, c] : levels) out[std::to_string(d)] = c;
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MatrixSet parse_matrix_set(std::string_view text, std::string_view source) {
  const Json doc = parse_json(text, source);
  const std::size_t dim = positive_integer(member(doc, "dim", source, "$"), source, "$.dim");
  const Json& list = member(doc, "matrices", source, "$");
  if (!list.is_array() || list.empty()) fail(source, "$.matrices", "expected a nonempty array");
  std::vector<Matrix> mats;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string path = "$.matrices[" + std::to_string(k) + "]";
    const Json& item = list[k];
    const Json& rows = member(item, "rows", source, path);
    if (!rows.is_array() || rows.size() != dim)
      fail(source, path + ".rows", "expected " + std::to_string(dim) + " rows");
    mats.push_back(Matrix::from_rows(grid(rows, dim, source, path + ".rows")));
    std::string name;
    if (auto it = item.find("name"); it != item.end()) {
      if (!it->is_string()) fail(source, path + ".name", "expected a string");
      name = it->get<std::string>();
    }
    names.push_back(std::move(name));
  }
  try {
    return MatrixSet(std::move(mats), std::move(names));
  } catch (const InputError& e) {
    fail(source, "$.matrices", e.what());
  }
}

SeminormBall parse_ball(std::string_view text, std::string_view source) {
  const Json doc = parse_json(text, source);
  const std::size_t dim = positive_integer(member(doc, "dim", source, "$"), source, "$.dim");
  const Json& normals = member(doc, "normals", source, "$");
  if (!normals.is_array() || normals.empty()) fail(source, "$.normals", "expected a nonempty array");
  try {
    return SeminormBall::from_normals(grid(normals, dim, source, "$.normals"));
  } catch (const InputError& e) {
    if (std::string_view(e.what()).starts_with(source)) throw;
    fail(source, "$.normals", e.what());
  }
}

std::string format_matrix_set(const MatrixSet& sigma) {
  std::string s = "{\n  \"dim\": " + std::to_string(sigma.dim()) + ",\n  \"matrices\": [\n";
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    s += "    {\n      \"name\": " + Json(sigma.names()[k]).dump() + ",\n      \"rows\": [\n";
    for (std::size_t r = 0; r < sigma.dim(); ++r)
      s += "        " + row_text(sigma[k].row(r)) + (r + 1 < sigma.dim() ? ",\n" : "\n");
    s += std::string("      ]\n    }") + (k + 1 < sigma.size() ? ",\n" : "\n");
  }
  return s + "  ]\n}\n";
}

std::string format_ball(const SeminormBall& ball) {
  std::string s = "{\n  \"dim\": " + std::to_string(ball.dim()) + ",\n  \"normals\": [\n";
  const auto& normals = ball.normals();
  for (std::size_t i = 0; i < normals.size(); ++i)
    s += "    " + row_text(normals[i]) + (i + 1 < normals.size() ? ",\n" : "\n");
  return s + "  ]\n}\n";
}

Json face_json(const SeminormBall& ball, const DoubleFaceKey& key) {
  Json out;
  out["pattern"] = pattern_text(key.pattern());
  if (ball.is_consensus()) {
    if (auto f = consensus_face_from_pattern(ball.dim(), key.pattern())) {
      out["s_min"] = one_based(f->s_min);
      out["s_max"] = one_based(f->s_max);
    }
  }
  return out;
}

Json word_json(const MatrixSet& sigma, const Word& word) {
  Json out = Json::array();
  for (auto k : word) out.push_back(sigma.names()[k]);
  return out;
}

Json decision_json(const SeminormBall& ball, const MatrixSet& sigma, const DecisionReport& report, bool timings) {
  Json out;
  out["verdict"] = to_string(report.verdict);
  out["dim"] = sigma.dim();
  out["matrices"] = sigma.size();
  out["pstar"] = report.bound_pstar;
  out["min_period"] = report.min_period;
  Json witness;
  witness["word"] = word_json(sigma, report.witness_word);
  witness["applied"] = "right-to-left";
  Json cycle = Json::array();
  for (const auto& key : report.witness_cycle) cycle.push_back(face_json(ball, key));
  witness["cycle"] = std::move(cycle);
  out["witness"] = std::move(witness);
  out["graph"] = {{"faces", report.stats.faces},
                  {"edges", report.stats.edges},
                  {"edges_to_interior", report.stats.edges_to_interior}};
  if (timings) {
    auto us = [](double ms) { return static_cast<std::uint64_t>(std::llround(ms * 1000.0)); };
    out["timings_us"] = {{"build", us(report.build_ms)}, {"decide", us(report.decide_ms)}};
  }
  return out;
}

Json consensus_json(const MatrixSet& sigma, const ConsensusDecision& decision, bool timings) {
  Json out = decision_json(consensus_ball(sigma.dim()), sigma, decision.report, timings);
  out["consensus"] = decision.report.verdict == Verdict::AllContracting;
  out["summary"] = decision.summary;
  out["provenance"] = decision.provenance;
  return out;
}

Json oracle_json(const MatrixSet& sigma, const OracleReport& report, std::uint64_t budget) {
  Json out;
  out["verdict"] = to_string(report.verdict);
  out["max_period"] = report.max_period;
  out["words_checked"] = big_integer(report.words_checked);
  out["words_evaluated"] = report.words_evaluated;
  out["work"] = report.work;
  out["budget"] = budget;
  out["settled_after"] = report.settled_after;
  Json words = Json::array();
  for (const auto& w : report.noncontracting_words) words.push_back(word_json(sigma, w));
  out["noncontracting_words"] = std::move(words);
  out["applied"] = "right-to-left";
  return out;
}

Json bounds_json(const ConsensusBounds& bounds) {
  Json out;
  out["pstar"] = bounds.pstar;
  out["paz_b"] = bounds.paz_b;
  out["dstar"] = bounds.dstar;
  Json levels = Json::object();
  for (const auto& [d, c] : bounds.level_counts) levels[std::to_string(d)] = c;
  out["levels"] = std::move(levels);
  return out;
}

Json lattice_json(const SeminormBall& ball, const DoubleFacePoset& poset) {
  Json out;
  out["dim"] = ball.dim();
  Json elements = Json::array();
  for (std::size_t i = 0; i < poset.faces.size(); ++i) {
    Json e;
    e["id"] = i;
    e["dim"] = poset.faces[i].dim;
    const Json face = face_json(ball, poset.faces[i].key);
    for (const auto& [k, v] : face.items()) e[k] = v;
    elements.push_back(std::move(e));
  }
  out["elements"] = std::move(elements);
  Json covers = Json::array();
  for (auto [a, b] : poset.order.covers()) covers.push_back({a, b});
  out["covers"] = std::move(covers);
  out["levels"] = levels_json(rank_level_sizes(poset.order));
  const auto w = width(poset.order);
  out["width"] = w.size;
  out["antichain"] = w.antichain;
  out["sperner"] = sperner_check(poset.order).holds;
  return out;
}

Json construction_json(const SeminormBall& ball, const Construction& construction) {
  Json out;
  out["pstar"] = construction.pstar;
  out["matrices"] = construction.sigma.size();
  Json cycle = Json::array();
  for (std::size_t i = 0; i < construction.cycle.size(); ++i) {
    Json step = face_json(ball, construction.cycle[i]);
    step["matrix"] = construction.sigma.names()[i];
    cycle.push_back(std::move(step));
  }
  out["cycle"] = std::move(cycle);
  out["verified"] = construction.checks;
  return out;
}

}  // namespace polystab::io
