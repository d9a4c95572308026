#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "mixbiotic/io.hpp"
#include "mixbiotic/netgen.hpp"
#include "mixbiotic/rng.hpp"

using namespace mixbiotic;

TEST_CASE("doubles round-trip through their shortest form") {
    Rng rng(1);
    for (int i = 0; i < 2000; ++i) {
        const double x = std::ldexp(rng.uniform01(), static_cast<int>(rng.uniform_below(60)) - 30);
        CHECK(io::parse_double(io::format_double(x)) == x);
    }
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(2.0) == "2");
    CHECK(io::format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(std::isinf(io::parse_double("inf")));
    CHECK_THROWS_AS(io::parse_double("1.5x"), io::FormatError);
}

TEST_CASE("graph JSON round-trip") {
    const auto g = generate_ba({30, 3, 2}, 8);
    const auto j = io::to_json(g);
    CHECK(j.at("n") == 30);
    CHECK(io::graph_from_json(j) == g);
    CHECK(io::graph_from_json(io::json::parse(j.dump())) == g);
    CHECK_THROWS_AS(io::graph_from_json(io::json::parse(R"({"n":3,"edges":[[0,0]]})")), io::FormatError);
    CHECK_THROWS_AS(io::graph_from_json(io::json::parse(R"({"edges":[]})")), io::FormatError);
}

TEST_CASE("stats, meta and measures JSON round-trip") {
    const std::vector<Edge> split{{0, 1}, {2, 3}};
    const auto s = graph_stats(Graph(4, split));
    const auto j = io::to_json(s);
    CHECK(j.at("diameter") == "inf");
    const auto back = io::graph_stats_from_json(io::json::parse(j.dump()));
    CHECK(std::isinf(back.diameter));
    CHECK(back.edge_count == 2);
    CHECK(back.mean_clustering == s.mean_clustering);

    const DatasetMeta meta{188508, 7375, 327, 4};
    CHECK(io::dataset_meta_from_json(io::to_json(meta)) == meta);

    MeasureSetD m;
    m.mu_I = 0.1;
    m.var_I = 1e-17;
    m.mu_L = 1.0 / 3.0;
    m.var_LR = 0.0672;
    m.mu_S = 0.7032;
    m.var_S = 0.021;
    fill_composites(m);
    m.delta_count = 99;
    CHECK(io::measure_set_from_json(io::json::parse(io::to_json(m).dump())) == m);
}

TEST_CASE("dense and sparse trace round-trips") {
    Rng rng(2);
    std::vector<Eigen::VectorXd> states;
    std::vector<SparseSnapshot> sparse;
    for (int t = 0; t < 12; ++t) {
        Eigen::VectorXd q = Eigen::VectorXd::Zero(9);
        for (int i = 0; i < 9; ++i)
            if (rng.bernoulli(0.3))
                q[i] = 0.5 * static_cast<double>(1 + rng.uniform_below(5));
        states.push_back(q);
        sparse.push_back(q.sparseView());
    }
    std::stringstream csv;
    io::write_trace_csv(csv, states);
    CHECK(csv.str().rfind("t,q_0,q_1", 0) == 0);
    const auto dense_back = io::read_trace_csv(csv);
    REQUIRE(dense_back.size() == states.size());
    for (std::size_t t = 0; t < states.size(); ++t)
        CHECK(dense_back[t] == states[t]);

    std::stringstream jsonl;
    io::write_trace_jsonl(jsonl, sparse);
    const std::string text = jsonl.str();
    std::stringstream copy(text);
    const auto sparse_back = io::read_trace_jsonl(copy);
    REQUIRE(sparse_back.size() == sparse.size());
    for (std::size_t t = 0; t < sparse.size(); ++t)
        CHECK(Eigen::VectorXd(sparse_back[t]) == states[t]);

    std::stringstream any_csv(csv.str()), any_jsonl(text);
    CHECK(io::read_trace_any(any_csv).size() == states.size());
    CHECK(io::read_trace_any(any_jsonl).size() == states.size());

    std::stringstream ragged("t,q_0,q_1\n0,1,0\n1,1\n");
    CHECK_THROWS_AS(io::read_trace_csv(ragged), io::FormatError);
}

TEST_CASE("grid CSV round-trip") {
    PhaseGrid grid;
    grid.threshold = 0.05;
    Rng rng(3);
    for (const auto& p : build_mesh(MeshSpec::default_mesh())) {
        GridCell c;
        c.point = p;
        c.measures.mu_I = rng.uniform01();
        c.measures.var_I = rng.uniform01();
        c.measures.mu_L = rng.uniform01();
        c.measures.var_L = rng.uniform01();
        c.measures.mu_LR = rng.uniform01();
        c.measures.var_LR = rng.uniform01();
        c.measures.mu_S = rng.uniform01();
        c.measures.var_S = rng.uniform01();
        fill_composites(c.measures);
        grid.cells.push_back(c);
    }
    normalize(grid);
    classify_phases(grid, grid.threshold);

    std::stringstream out;
    io::write_grid_csv(out, grid);
    CHECK(out.str().rfind(io::grid_csv_header, 0) == 0);
    const auto back = io::read_grid_csv(out);
    REQUIRE(back.cells.size() == grid.cells.size());
    for (std::size_t i = 0; i < grid.cells.size(); ++i) {
        const auto &a = grid.cells[i], &b = back.cells[i];
        CHECK(a.point == b.point);
        CHECK(a.measures.mu_L == b.measures.mu_L);
        CHECK(a.measures.var_S == b.measures.var_S);
        CHECK(a.measures.m_mix == b.measures.m_mix);
        CHECK(a.norm_mix == b.norm_mix);
        CHECK(a.phase == b.phase);
    }
}

TEST_CASE("mesh file") {
    std::stringstream in("# extra points\n0.4,0.3\n0.8 0.1\n\n");
    const auto mesh = io::read_mesh(in);
    REQUIRE(mesh.size() == 2);
    CHECK(mesh[0] == MeshPoint{0.4, 0.3});
    CHECK(mesh[1] == MeshPoint{0.8, 0.1});
    std::stringstream bad("0.4\n");
    CHECK_THROWS_AS(io::read_mesh(bad), io::FormatError);
}
