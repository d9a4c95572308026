#ifndef MIXBIOTIC_INGEST_HPP
#define MIXBIOTIC_INGEST_HPP

#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

#include "mixbiotic/graph.hpp"
#include "mixbiotic/measures.hpp"

namespace mixbiotic {

struct IngestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Delimiter { Auto, Whitespace, Comma };

/// Layout of a plain-text event file. Column indices are zero based.
struct FormatConfig {
    Delimiter delimiter = Delimiter::Auto;
    std::vector<std::string> comment_prefixes{"#", "%"};
    int time_col = 0;
    int src_col = 1;
    int dst_col = 2;
    bool directed = false;
};

void validate(const FormatConfig& fmt);

struct Event {
    double time = 0;
    int a = 0; ///< source for directed logs
    int b = 0;
};

/// Events sorted stably by time, vertices densely indexed in order of first
/// appearance in the file.
struct EventLog {
    std::vector<Event> events;
    bool directed = false;
    std::vector<std::string> labels; ///< labels[i] is the original id of vertex i

    int vertex_count() const { return static_cast<int>(labels.size()); }
};

struct DatasetMeta {
    long t_count = 0;  ///< accepted event rows
    long t_max = 0;    ///< distinct timestamps
    int vertex_count = 0;
    long dropped_rows = 0; ///< malformed rows and self-loops

    bool operator==(const DatasetMeta&) const = default;
};

std::pair<EventLog, DatasetMeta> parse_events(std::istream& in, const FormatConfig& fmt);
std::pair<EventLog, DatasetMeta> parse_events_file(const std::string& path, const FormatConfig& fmt);

/// One undirected edge per distinct vertex pair seen in any event.
Graph aggregate_graph(const EventLog& log);

/// Which endpoints of an event receive a unit. Undirected logs always use Both.
enum class Incidence { Both, ReceiverOnly };

using SparseSnapshot = Eigen::SparseVector<double>;

/// Calls `visit(rank, snapshot)` once per distinct timestamp in ascending
/// order. Snapshot entries are u times the number of events at that
/// timestamp incident to the vertex; nothing carries over between timestamps.
void for_each_snapshot(const EventLog& log, double u, Incidence incidence,
                       const std::function<void(long, const SparseSnapshot&)>& visit);

std::vector<SparseSnapshot> events_to_trace(const EventLog& log, double u, Incidence incidence = Incidence::Both);

/// Measures over the snapshot series, holding two snapshots at a time.
MeasureSetD dataset_measures(const EventLog& log, double u, Incidence incidence = Incidence::Both);

} // namespace mixbiotic

#endif // MIXBIOTIC_INGEST_HPP
