#include "mixbiotic/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>
#include <unordered_map>

namespace mixbiotic {

void validate(const FormatConfig& fmt) {
    if (fmt.time_col < 0 || fmt.src_col < 0 || fmt.dst_col < 0)
        throw IngestError("column indices must be non-negative");
    if (fmt.time_col == fmt.src_col || fmt.time_col == fmt.dst_col || fmt.src_col == fmt.dst_col)
        throw IngestError("time, source and destination columns must be distinct");
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, Delimiter delim) {
    if (delim == Delimiter::Auto)
        delim = line.find(',') != std::string_view::npos ? Delimiter::Comma : Delimiter::Whitespace;
    std::vector<std::string_view> fields;
    if (delim == Delimiter::Comma) {
        std::size_t start = 0;
        while (true) {
            const auto pos = line.find(',', start);
            fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
            if (pos == std::string_view::npos)
                break;
            start = pos + 1;
        }
    } else {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            const auto start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                ++i;
            if (i > start)
                fields.push_back(line.substr(start, i - start));
        }
    }
    return fields;
}

bool parse_time(std::string_view s, double& out) {
    if (s.empty())
        return false;
    if (s.front() == '+')
        s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

} // namespace

std::pair<EventLog, DatasetMeta> parse_events(std::istream& in, const FormatConfig& fmt) {
    validate(fmt);
    const auto needed = static_cast<std::size_t>(std::max({fmt.time_col, fmt.src_col, fmt.dst_col})) + 1;

    EventLog log;
    log.directed = fmt.directed;
    DatasetMeta meta;
    std::unordered_map<std::string, int> index;
    auto vertex = [&](std::string_view label) {
        auto [it, inserted] = index.try_emplace(std::string(label), static_cast<int>(log.labels.size()));
        if (inserted)
            log.labels.emplace_back(label);
        return it->second;
    };

    long short_rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        const auto body = trim(line);
        if (body.empty())
            continue;
        if (std::any_of(fmt.comment_prefixes.begin(), fmt.comment_prefixes.end(),
                        [&](const std::string& p) { return !p.empty() && body.starts_with(p); }))
            continue;
        const auto fields = split(body, fmt.delimiter);
        if (fields.size() < needed) {
            ++short_rows;
            ++meta.dropped_rows;
            continue;
        }
        double time = 0;
        const auto src = fields[static_cast<std::size_t>(fmt.src_col)];
        const auto dst = fields[static_cast<std::size_t>(fmt.dst_col)];
        if (!parse_time(fields[static_cast<std::size_t>(fmt.time_col)], time) || src.empty() || dst.empty() ||
            src == dst) {
            ++meta.dropped_rows;
            continue;
        }
        log.events.push_back({time, vertex(src), vertex(dst)});
    }

    if (log.events.empty()) {
        if (short_rows > 0)
            throw IngestError("no usable rows: role column index " + std::to_string(needed - 1) +
                              " is out of range for every data row");
        throw IngestError("no usable event rows");
    }

    std::stable_sort(log.events.begin(), log.events.end(),
                     [](const Event& x, const Event& y) { return x.time < y.time; });
    meta.t_count = static_cast<long>(log.events.size());
    meta.t_max = 1;
    for (std::size_t i = 1; i < log.events.size(); ++i)
        if (log.events[i].time != log.events[i - 1].time)
            ++meta.t_max;
    meta.vertex_count = log.vertex_count();
    return {std::move(log), meta};
}

std::pair<EventLog, DatasetMeta> parse_events_file(const std::string& path, const FormatConfig& fmt) {
    std::ifstream in(path);
    if (!in)
        throw IngestError("cannot open event file '" + path + "'");
    return parse_events(in, fmt);
}

Graph aggregate_graph(const EventLog& log) {
    std::vector<Edge> edges;
    edges.reserve(log.events.size());
    for (const auto& e : log.events)
        edges.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(log.vertex_count(), edges);
}

void for_each_snapshot(const EventLog& log, double u, Incidence incidence,
                       const std::function<void(long, const SparseSnapshot&)>& visit) {
    if (!(u > 0.0))
        throw std::invalid_argument("information unit must be positive");
    const bool receiver_only = log.directed && incidence == Incidence::ReceiverOnly;
    const int n = log.vertex_count();
    std::vector<double> dense(static_cast<std::size_t>(n), 0.0);
    std::vector<int> touched;
    long rank = 0;

    std::size_t i = 0;
    while (i < log.events.size()) {
        const double t = log.events[i].time;
        touched.clear();
        auto bump = [&](int v) {
            if (dense[static_cast<std::size_t>(v)] == 0.0)
                touched.push_back(v);
            dense[static_cast<std::size_t>(v)] += u;
        };
        for (; i < log.events.size() && log.events[i].time == t; ++i) {
            if (!receiver_only)
                bump(log.events[i].a);
            bump(log.events[i].b);
        }
        std::sort(touched.begin(), touched.end());
        SparseSnapshot snap(n);
        snap.reserve(static_cast<Eigen::Index>(touched.size()));
        for (int v : touched) {
            snap.insertBack(v) = dense[static_cast<std::size_t>(v)];
            dense[static_cast<std::size_t>(v)] = 0.0;
        }
        visit(rank++, snap);
    }
}

std::vector<SparseSnapshot> events_to_trace(const EventLog& log, double u, Incidence incidence) {
    std::vector<SparseSnapshot> trace;
    for_each_snapshot(log, u, incidence, [&](long, const SparseSnapshot& s) { trace.push_back(s); });
    return trace;
}

MeasureSetD dataset_measures(const EventLog& log, double u, Incidence incidence) {
    StreamingSeries<SparseSnapshot> series(u);
    for_each_snapshot(log, u, incidence, [&](long, const SparseSnapshot& s) { series.push(s); });
    if (series.transitions() < 1)
        throw IngestError("dataset has a single timestamp; measures need at least two");
    return series.result();
}

} // namespace mixbiotic
