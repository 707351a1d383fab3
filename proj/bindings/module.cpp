#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "qap/bench.hpp"
#include "qap/delta.hpp"
#include "qap/delta_table.hpp"
#include "qap/instance.hpp"
#include "qap/symbolic.hpp"
#include "qap/tabu.hpp"
#include "qap/verify.hpp"

namespace py = pybind11;
using namespace qap;

namespace {

std::vector<std::int32_t> flatten(const std::vector<std::vector<std::int32_t>>& rows, int n) {
    std::vector<std::int32_t> flat;
    flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix rows must all have length n");
    }
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("matrix must have n rows");
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}

std::string poly_str(const Poly& p) { return p.to_string(sym::var_name); }

}  // namespace

PYBIND11_MODULE(_qapkit, m) {
    m.doc() = "QAP tabu-search core: instances, delta formulas, delta-table "
              "strategies, search, and formula verification";

    py::enum_<InstanceShape>(m, "InstanceShape")
        .value("general", InstanceShape::general)
        .value("symmetric_zero_diag", InstanceShape::symmetric_zero_diag);

    py::enum_<Strategy>(m, "Strategy")
        .value("classic", Strategy::classic)
        .value("novel", Strategy::novel);

    py::enum_<RVariant>(m, "RVariant")
        .value("literal", RVariant::literal)
        .value("pattern_consistent", RVariant::pattern_consistent);

    py::enum_<FlowFrame>(m, "FlowFrame")
        .value("post_swap", FlowFrame::post_swap)
        .value("pre_swap", FlowFrame::pre_swap);

    py::class_<RngState>(m, "RngState")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("next", &RngState::next)
        .def("next_below", &RngState::next_below, py::arg("bound"));

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<std::vector<int>>(), py::arg("assign"))
        .def_static("random", &Permutation::random, py::arg("n"), py::arg("rng"))
        .def("__len__", &Permutation::size)
        .def("__getitem__",
             [](const Permutation& p, int loc) {
                 if (loc < 0 || loc >= p.size()) throw py::index_error();
                 return p[loc];
             })
        .def("swap", &Permutation::swap, py::arg("p"), py::arg("q"))
        .def_property_readonly("assign", &Permutation::assign)
        .def(py::self == py::self)
        .def("__repr__", [](const Permutation& p) {
            std::ostringstream out;
            out << "Permutation([";
            for (int x = 0; x < p.size(); ++x) out << (x ? ", " : "") << p[x];
            out << "])";
            return out.str();
        });

    py::class_<QapInstance>(m, "QapInstance")
        .def(py::init<int, std::vector<std::int32_t>, std::vector<std::int32_t>, std::string>(),
             py::arg("n"), py::arg("dist"), py::arg("flow"), py::arg("name") = "")
        .def(py::init([](int n, const std::vector<std::vector<std::int32_t>>& dist,
                         const std::vector<std::vector<std::int32_t>>& flow, std::string name) {
                 return QapInstance(n, flatten(dist, n), flatten(flow, n), std::move(name));
             }),
             py::arg("n"), py::arg("dist"), py::arg("flow"), py::arg("name") = "")
        .def_property_readonly("n", &QapInstance::n)
        .def_property_readonly("name", &QapInstance::name)
        .def("dist", &QapInstance::dist, py::arg("i"), py::arg("j"))
        .def("flow", &QapInstance::flow, py::arg("a"), py::arg("b"))
        .def("__repr__", [](const QapInstance& inst) {
            std::ostringstream out;
            out << "QapInstance(n=" << inst.n();
            if (!inst.name().empty()) out << ", name='" << inst.name() << "'";
            out << ")";
            return out.str();
        });

    m.def("parse_qaplib",
          py::overload_cast<const std::string&, bool, std::string>(&parse_qaplib),
          py::arg("text"), py::arg("swap_matrix_roles") = false, py::arg("name") = "");
    m.def("to_qaplib", &to_qaplib, py::arg("inst"));
    m.def("random_instance", &random_instance, py::arg("n"), py::arg("max_entry"),
          py::arg("seed"), py::arg("shape"), py::arg("name") = "");

    m.def("cost", &cost, py::arg("inst"), py::arg("perm"));
    m.def("delta_oracle", &delta_oracle, py::arg("inst"), py::arg("perm"), py::arg("p"),
          py::arg("q"));
    m.def("delta_full", &delta_full, py::arg("inst"), py::arg("perm"), py::arg("i"),
          py::arg("j"));
    m.def("delta_disjoint_update", &delta_disjoint_update, py::arg("inst"), py::arg("perm"),
          py::arg("old"), py::arg("i"), py::arg("j"), py::arg("a"), py::arg("b"));

    py::class_<RTerms>(m, "RTerms")
        .def_readonly("r_ij", &RTerms::r_ij)
        .def_readonly("r_ik", &RTerms::r_ik)
        .def_readonly("r_jk", &RTerms::r_jk)
        .def_readonly("r_ik_star", &RTerms::r_ik_star)
        .def_readonly("r_jk_star", &RTerms::r_jk_star)
        .def("__repr__", [](const RTerms& r) {
            std::ostringstream out;
            out << "RTerms(r_ij=" << r.r_ij << ", r_ik=" << r.r_ik << ", r_jk=" << r.r_jk
                << ", r_ik_star=" << r.r_ik_star << ", r_jk_star=" << r.r_jk_star << ")";
            return out.str();
        });

    m.def("r_terms", &r_terms, py::arg("inst"), py::arg("perm"), py::arg("i"), py::arg("j"),
          py::arg("k"), py::arg("variant"));
    m.def("delta_overlap_via_r", &delta_overlap_via_r, py::arg("delta_ij"), py::arg("delta_ik"),
          py::arg("delta_jk"), py::arg("delta_ik_star"), py::arg("r"));
    m.def("dist_bracket", &dist_bracket, py::arg("inst"), py::arg("i"), py::arg("j"),
          py::arg("k"));
    m.def("flow_bracket", &flow_bracket, py::arg("inst"), py::arg("perm"), py::arg("i"),
          py::arg("j"), py::arg("k"));
    m.def("delta_overlap_update", &delta_overlap_update, py::arg("inst"), py::arg("perm"),
          py::arg("delta_ij"), py::arg("delta_ik"), py::arg("delta_jk"),
          py::arg("delta_ik_star"), py::arg("i"), py::arg("j"), py::arg("k"),
          py::arg("frame") = kExactFlowFrame);

    py::class_<UpdateStats>(m, "UpdateStats")
        .def_readonly("init_computes", &UpdateStats::init_computes)
        .def_readonly("full_recomputes", &UpdateStats::full_recomputes)
        .def_readonly("o1_disjoint", &UpdateStats::o1_disjoint)
        .def_readonly("o1_overlap", &UpdateStats::o1_overlap)
        .def_readonly("o1_reversal", &UpdateStats::o1_reversal)
        .def("__repr__", [](const UpdateStats& s) {
            std::ostringstream out;
            out << "UpdateStats(init_computes=" << s.init_computes
                << ", full_recomputes=" << s.full_recomputes
                << ", o1_disjoint=" << s.o1_disjoint << ", o1_overlap=" << s.o1_overlap
                << ", o1_reversal=" << s.o1_reversal << ")";
            return out.str();
        });

    py::class_<DeltaTable>(m, "DeltaTable")
        .def(py::init<const QapInstance&, const Permutation&, Strategy>(), py::arg("inst"),
             py::arg("perm"), py::arg("strategy"))
        .def_property_readonly("n", &DeltaTable::n)
        .def_property_readonly("strategy", &DeltaTable::strategy)
        .def_property_readonly("stats", &DeltaTable::stats)
        .def("at", &DeltaTable::at, py::arg("i"), py::arg("j"))
        .def("apply_swap", &DeltaTable::apply_swap, py::arg("inst"), py::arg("perm"),
             py::arg("p"), py::arg("q"))
        .def("set_debug_verify", &DeltaTable::set_debug_verify, py::arg("on"))
        .def(py::self == py::self);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("best_perm", &SearchResult::best_perm)
        .def_readonly("best_cost", &SearchResult::best_cost)
        .def_readonly("initial_cost", &SearchResult::initial_cost)
        .def_readonly("final_cost", &SearchResult::final_cost)
        .def_readonly("iterations", &SearchResult::iterations)
        .def_readonly("stats", &SearchResult::stats)
        .def_readonly("wall_seconds", &SearchResult::wall_seconds)
        .def_readonly("trajectory_hash", &SearchResult::trajectory_hash)
        .def("__repr__", [](const SearchResult& r) {
            std::ostringstream out;
            out << "SearchResult(best_cost=" << r.best_cost << ", iterations=" << r.iterations
                << ")";
            return out.str();
        });

    m.def(
        "solve",
        [](const QapInstance& inst, std::uint64_t seed, std::uint64_t iterations,
           Strategy strategy, int tenure_low, int tenure_high, bool debug_verify_table,
           std::uint64_t cost_check_interval) {
            SolveOptions opt;
            opt.seed = seed;
            opt.iterations = iterations;
            opt.strategy = strategy;
            opt.tenure_low = tenure_low;
            opt.tenure_high = tenure_high;
            opt.debug_verify_table = debug_verify_table;
            opt.cost_check_interval = cost_check_interval;
            return solve(inst, opt);
        },
        py::arg("inst"), py::arg("seed") = 0, py::arg("iterations") = 1000,
        py::arg("strategy") = Strategy::novel, py::arg("tenure_low") = 0,
        py::arg("tenure_high") = 0, py::arg("debug_verify_table") = false,
        py::arg("cost_check_interval") = 0,
        py::call_guard<py::gil_scoped_release>());

    m.def("exhaustive_optimum", &exhaustive_optimum, py::arg("inst"),
          py::call_guard<py::gil_scoped_release>());

    m.def("verify_simplification", [](RVariant variant) {
        const SimplificationReport report = verify_simplification(variant);
        py::dict out;
        out["holds"] = report.holds;
        out["difference"] = poly_str(report.difference);
        out["difference_terms"] = report.difference.term_count();
        return out;
    }, py::arg("variant"));

    m.def("verify_per_g_identity", [] {
        const PerGReport report = verify_per_g_identity();
        py::dict out;
        out["holds"] = report.holds;
        out["holds_out"] = report.holds_out;
        out["holds_in"] = report.holds_in;
        out["residual_out"] = poly_str(report.residual_out);
        out["residual_in"] = poly_str(report.residual_in);
        return out;
    });

    py::enum_<VerifyLevel>(m, "VerifyLevel")
        .value("fast", VerifyLevel::fast)
        .value("full", VerifyLevel::full);

    m.def(
        "run_verification",
        [](VerifyLevel level) {
            const VerifyResult result = run_verification(level);
            py::dict out;
            out["passed"] = result.passed;
            out["lines"] = result.lines;
            return out;
        },
        py::arg("level") = VerifyLevel::fast);

    py::class_<BenchRecord>(m, "BenchRecord")
        .def_readonly("instance_name", &BenchRecord::instance_name)
        .def_readonly("n", &BenchRecord::n)
        .def_readonly("strategy", &BenchRecord::strategy)
        .def_readonly("iterations", &BenchRecord::iterations)
        .def_readonly("total_wall_time", &BenchRecord::total_wall_time)
        .def_readonly("time_per_iteration", &BenchRecord::time_per_iteration)
        .def_readonly("full_recomputes", &BenchRecord::full_recomputes)
        .def_readonly("o1_disjoint", &BenchRecord::o1_disjoint)
        .def_readonly("o1_overlap", &BenchRecord::o1_overlap)
        .def_readonly("o1_reversal", &BenchRecord::o1_reversal)
        .def_readonly("best_cost", &BenchRecord::best_cost)
        .def_readonly("trajectory_hash", &BenchRecord::trajectory_hash)
        .def_readonly("seed", &BenchRecord::seed);

    py::class_<BenchSummary>(m, "BenchSummary")
        .def_readonly("rows", &BenchSummary::rows)
        .def_readonly("median_speedup", &BenchSummary::median_speedup);

    m.def("run_bench", &run_bench, py::arg("inst"), py::arg("seeds"), py::arg("iterations"),
          py::call_guard<py::gil_scoped_release>());
    m.def("bench_csv", &bench_csv, py::arg("records"));

    m.attr("EXACT_FLOW_FRAME") = kExactFlowFrame;
}
