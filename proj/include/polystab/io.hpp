#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "polystab/ball.hpp"
#include "polystab/constructions.hpp"
#include "polystab/facemap.hpp"
#include "polystab/matrix.hpp"
#include "polystab/oracle.hpp"
#include "polystab/poset.hpp"
#include "polystab/stochastic.hpp"

namespace polystab::io {

using Json = nlohmann::ordered_json;

// Whole file as text. Throws InputError when unreadable.
std::string read_file(const std::string& path);

// {"dim": n, "matrices": [{"name": str, "rows": [[entry, ...], ...]}, ...]}
// Entries are JSON integers or strings holding integers, decimals or p/q.
// Syntax errors report "source:line:col"; structural errors report the
// JSON path of the offending value.
MatrixSet parse_matrix_set(std::string_view text, std::string_view source = "<input>");

// {"dim": n, "normals": [[entry, ...], ...]}
SeminormBall parse_ball(std::string_view text, std::string_view source = "<input>");

// Canonical text: lowest-terms "p/q" strings, one matrix row per line.
// Parsing the output and formatting again is byte-identical.
std::string format_matrix_set(const MatrixSet& sigma);
std::string format_ball(const SeminormBall& ball);

// Face description: {"pattern": "-0+", ...}; consensus faces add 1-based
// "s_min" and "s_max".
Json face_json(const SeminormBall& ball, const DoubleFaceKey& key);

Json word_json(const MatrixSet& sigma, const Word& word);

Json decision_json(const SeminormBall& ball, const MatrixSet& sigma, const DecisionReport& report,
                   bool timings);
Json consensus_json(const MatrixSet& sigma, const ConsensusDecision& decision, bool timings);
Json oracle_json(const MatrixSet& sigma, const OracleReport& report, std::uint64_t budget);
Json bounds_json(const ConsensusBounds& bounds);
Json lattice_json(const SeminormBall& ball, const DoubleFacePoset& poset);
Json construction_json(const SeminormBall& ball, const Construction& construction);

}  // namespace polystab::io
