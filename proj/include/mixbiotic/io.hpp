#ifndef MIXBIOTIC_IO_HPP
#define MIXBIOTIC_IO_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "mixbiotic/commsim.hpp"
#include "mixbiotic/graph.hpp"
#include "mixbiotic/ingest.hpp"
#include "mixbiotic/measures.hpp"
#include "mixbiotic/sweep.hpp"

namespace mixbiotic::io {

using nlohmann::json;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest decimal that parses back to the same double; "inf" for +infinity.
std::string format_double(double x);
double parse_double(const std::string& s);

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json to_json(const GraphStats& s);
GraphStats graph_stats_from_json(const json& j);

json to_json(const DatasetMeta& m);
DatasetMeta dataset_meta_from_json(const json& j);

json to_json(const MeasureSetD& m);
MeasureSetD measure_set_from_json(const json& j);

/// Dense trace CSV: header `t,q_0,...,q_{n-1}`, one row per state.
void write_trace_csv(std::ostream& out, const std::vector<Eigen::VectorXd>& states);
std::vector<Eigen::VectorXd> read_trace_csv(std::istream& in);

/// Sparse trace, one JSON object per line: {"t": k, "n": dim, "nz": [[i, q_i], ...]}.
void write_sparse_row(std::ostream& out, long t, const SparseSnapshot& q);
void write_trace_jsonl(std::ostream& out, const std::vector<SparseSnapshot>& trace);
std::vector<SparseSnapshot> read_trace_jsonl(std::istream& in);

/// Either trace form, detected from the first non-blank character.
std::vector<Eigen::VectorXd> read_trace_any(std::istream& in);

inline constexpr const char* grid_csv_header =
    "g,d,mu_I,var_I,mu_L,var_L,mu_LR,var_LR,mu_S,var_S,m_atom,m_mix,m_mob,norm_atom,norm_mix,norm_mob,phase";

void write_grid_csv(std::ostream& out, const PhaseGrid& grid);
PhaseGrid read_grid_csv(std::istream& in);

/// Mesh file: one "g,d" (or "g d") pair per line, '#' comments allowed.
std::vector<MeshPoint> read_mesh(std::istream& in);

void write_polar_csv(std::ostream& out, const std::vector<PolarPoint>& points);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace mixbiotic::io

#endif // MIXBIOTIC_IO_HPP
