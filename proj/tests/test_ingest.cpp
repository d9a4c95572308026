#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "mixbiotic/ingest.hpp"
#include "mixbiotic/rng.hpp"

using namespace mixbiotic;

namespace {

std::pair<EventLog, DatasetMeta> parse(const std::string& text, FormatConfig fmt = {}) {
    std::istringstream in(text);
    return parse_events(in, fmt);
}

int index_of(const EventLog& log, const std::string& label) {
    const auto it = std::find(log.labels.begin(), log.labels.end(), label);
    REQUIRE(it != log.labels.end());
    return static_cast<int>(it - log.labels.begin());
}

Eigen::VectorXd dense(const SparseSnapshot& s) { return Eigen::VectorXd(s); }

} // namespace

TEST_CASE("row and timestamp counts") {
    auto [log, meta] = parse("1 a b\n2 a c\n");
    CHECK(meta.t_count == 2);
    CHECK(meta.t_max == 2);
    CHECK(meta.vertex_count == 3);

    std::tie(log, meta) = parse("20 a b\n20 b c\n40 a c\n");
    CHECK(meta.t_count == 3);
    CHECK(meta.t_max == 2);
}

TEST_CASE("comments, blanks, extras and dropped rows") {
    const auto [log, meta] = parse("% header\n# more\n\n1 a b 2BIO1 2BIO2\n2 a a\n3 z\nnope a b\n4 b c\n");
    CHECK(meta.t_count == 2);
    CHECK(meta.dropped_rows == 3);
    CHECK(meta.vertex_count == 3);
    CHECK(log.labels == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("comma and explicit columns") {
    FormatConfig fmt;
    fmt.time_col = 2;
    fmt.src_col = 0;
    fmt.dst_col = 1;
    const auto [log, meta] = parse("x,y,5\ny,z,3\n", fmt);
    CHECK(meta.t_count == 2);
    REQUIRE(log.events.size() == 2);
    CHECK(log.events[0].time == 3);
    CHECK(log.events[1].time == 5);

    fmt.delimiter = Delimiter::Whitespace;
    CHECK_THROWS_AS(parse("x,y,5\n", fmt), IngestError);
}

TEST_CASE("ingest errors") {
    CHECK_THROWS_AS(parse(""), IngestError);
    CHECK_THROWS_AS(parse("# only comments\n"), IngestError);
    FormatConfig wide;
    wide.dst_col = 5;
    CHECK_THROWS_AS(parse("1 a b\n", wide), IngestError);
    FormatConfig same;
    same.dst_col = 1;
    CHECK_THROWS(validate(same));
    CHECK_THROWS(parse("1 a b\n", same));
}

TEST_CASE("events are sorted stably by time") {
    const auto [log, meta] = parse("5 a b\n1 c d\n5 e f\n1 g h\n");
    REQUIRE(log.events.size() == 4);
    CHECK(log.events[0].a == index_of(log, "c"));
    CHECK(log.events[1].a == index_of(log, "g"));
    CHECK(log.events[2].a == index_of(log, "a"));
    CHECK(log.events[3].a == index_of(log, "e"));
}

TEST_CASE("aggregate graph deduplicates across time") {
    const auto [log, meta] = parse("1 a b\n1 a c\n2 b a\n");
    const auto g = aggregate_graph(log);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("snapshot incidence example") {
    const auto [log, meta] = parse("1 a b\n1 a c\n");
    const auto trace = events_to_trace(log, 1.0);
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].coeff(index_of(log, "a")) == 2);
    CHECK(trace[0].coeff(index_of(log, "b")) == 1);
    CHECK(trace[0].coeff(index_of(log, "c")) == 1);

    const auto [one, m1] = parse("9 p q\n");
    const auto t1 = events_to_trace(one, 2.5);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].nonZeros() == 2);
    CHECK(t1[0].sum() == 5.0);

    // Directed receiver-only counting.
    FormatConfig fmt;
    fmt.directed = true;
    const auto [dlog, dm] = parse("1 a b\n1 a c\n", fmt);
    const auto rt = events_to_trace(dlog, 1.0, Incidence::ReceiverOnly);
    CHECK(rt[0].coeff(index_of(dlog, "a")) == 0);
    CHECK(rt[0].coeff(index_of(dlog, "b")) == 1);
    CHECK(rt[0].sum() == 2);
}

TEST_CASE("random logs: conservation, length, order independence, graph roundtrip") {
    Rng rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        const int vertices = 2 + static_cast<int>(rng.uniform_below(10));
        const int rows = 1 + static_cast<int>(rng.uniform_below(60));
        std::vector<std::string> lines;
        std::map<long, long> per_time;
        for (int r = 0; r < rows; ++r) {
            const long t = static_cast<long>(rng.uniform_below(8)) * 20;
            const auto a = rng.uniform_below(static_cast<std::uint64_t>(vertices));
            const auto b = rng.uniform_below(static_cast<std::uint64_t>(vertices));
            if (a != b)
                ++per_time[t];
            lines.push_back(std::to_string(t) + " v" + std::to_string(a) + " v" + std::to_string(b));
        }
        if (per_time.empty())
            continue;
        std::string text;
        for (const auto& l : lines)
            text += l + "\n";
        const auto [log, meta] = parse(text);
        CHECK(meta.t_max == static_cast<long>(per_time.size()));
        CHECK(meta.t_max <= meta.t_count);

        const auto trace = events_to_trace(log, 1.0);
        REQUIRE(trace.size() == per_time.size());
        std::size_t k = 0;
        std::vector<Edge> from_trace;
        for (const auto& [t, count] : per_time)
            CHECK(trace[k++].sum() == 2.0 * count);

        // Reverse rows: only the order within a timestamp changes after sorting,
        // but vertex numbering follows first appearance, so compare by label.
        std::string reversed;
        for (auto it = lines.rbegin(); it != lines.rend(); ++it)
            reversed += *it + "\n";
        const auto [rlog, rmeta] = parse(reversed);
        const auto rtrace = events_to_trace(rlog, 1.0);
        REQUIRE(rtrace.size() == trace.size());
        for (std::size_t s = 0; s < trace.size(); ++s)
            for (int v = 0; v < log.vertex_count(); ++v)
                CHECK(trace[s].coeff(v) == rtrace[s].coeff(index_of(rlog, log.labels[static_cast<std::size_t>(v)])));

        for (const auto& e : log.events)
            from_trace.emplace_back(e.a, e.b);
        CHECK(aggregate_graph(log) == Graph(log.vertex_count(), from_trace));

        if (trace.size() >= 2) {
            const auto streamed = dataset_measures(log, 1.0);
            std::vector<Eigen::VectorXd> held;
            for (const auto& s : trace)
                held.push_back(dense(s));
            const auto direct = series_measures(held, 1.0);
            CHECK(streamed.delta_count == meta.t_max - 1);
            CHECK(std::abs(streamed.mu_L - direct.mu_L) <= 1e-9);
            CHECK(std::abs(streamed.var_LR - direct.var_LR) <= 1e-9);
            CHECK(std::abs(streamed.mu_S - direct.mu_S) <= 1e-9);
            CHECK(std::abs(streamed.var_S - direct.var_S) <= 1e-9);
        }
    }
}

TEST_CASE("duplicate rows count multiply") {
    const auto [log, meta] = parse("1 a b\n1 a b\n");
    CHECK(meta.t_count == 2);
    const auto trace = events_to_trace(log, 1.0);
    CHECK(trace[0].coeff(index_of(log, "a")) == 2);
}
