#pragma once

// Runs several solvers over a directory of instance files and cross-checks
// their verdicts, witnesses and internal counters.

#include <recolor/io.hpp>
#include <recolor/solve.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace recolor::bench {

struct Cell {
    Algorithm algorithm;
    SearchStatus status = SearchStatus::not_found;
    double millis = 0;
    std::size_t counter = 0;
    bool witness_valid = true; // vacuously true without a witness
    bool bound_ok = true;      // fpt only: calls <= 2^{k(ell+1)}
};

struct Row {
    std::string file;
    std::string error; // parse/validation failure; cells empty then
    std::vector<Cell> cells;
    bool disagreement = false;
};

struct Report {
    std::vector<Row> rows;
    std::size_t disagreements = 0;
    std::size_t invalid_witnesses = 0;
    std::size_t bound_violations = 0;
    std::size_t errors = 0;
    std::size_t timeouts = 0;

    bool ok() const { return disagreements == 0 && invalid_witnesses == 0 && bound_violations == 0; }

    int exit_code() const
    {
        if (!ok())
            return 1;
        return errors == 0 ? 0 : 2;
    }

    std::string text() const
    {
        std::ostringstream out;
        out << std::left << std::setw(32) << "instance" << std::setw(8) << "algo" << std::setw(18) << "verdict"
            << std::right << std::setw(12) << "ms" << std::setw(14) << "counter" << "  flags\n";
        for (const Row & row : rows) {
            if (!row.error.empty()) {
                out << std::left << std::setw(32) << row.file << "error: " << row.error << '\n';
                continue;
            }
            for (const Cell & cell : row.cells) {
                out << std::left << std::setw(32) << row.file << std::setw(8) << to_string(cell.algorithm)
                    << std::setw(18) << verdict(cell.status) << std::right << std::setw(12) << std::fixed
                    << std::setprecision(3) << cell.millis << std::setw(14) << cell.counter << ' ';
                if (row.disagreement)
                    out << " DISAGREE";
                if (!cell.witness_valid)
                    out << " BAD-WITNESS";
                if (!cell.bound_ok)
                    out << " BOUND";
                out << '\n';
            }
        }
        out << "instances: " << rows.size() << ", disagreements: " << disagreements
            << ", invalid witnesses: " << invalid_witnesses << ", bound violations: " << bound_violations
            << ", timeouts: " << timeouts << ", errors: " << errors << '\n';
        return out.str();
    }

    nlohmann::json json() const
    {
        nlohmann::json rows_json = nlohmann::json::array();
        for (const Row & row : rows) {
            nlohmann::json r{{"file", row.file}, {"disagreement", row.disagreement}};
            if (!row.error.empty())
                r["error"] = row.error;
            nlohmann::json cells = nlohmann::json::array();
            for (const Cell & cell : row.cells)
                cells.push_back({{"algorithm", to_string(cell.algorithm)},
                                 {"verdict", verdict(cell.status)},
                                 {"millis", cell.millis},
                                 {"counter", cell.counter},
                                 {"witness_valid", cell.witness_valid},
                                 {"bound_ok", cell.bound_ok}});
            r["cells"] = std::move(cells);
            rows_json.push_back(std::move(r));
        }
        return {{"rows", std::move(rows_json)},
                {"summary",
                 {{"instances", rows.size()},
                  {"disagreements", disagreements},
                  {"invalid_witnesses", invalid_witnesses},
                  {"bound_violations", bound_violations},
                  {"timeouts", timeouts},
                  {"errors", errors}}}};
    }

    static const char * verdict(SearchStatus s)
    {
        switch (s) {
        case SearchStatus::found: return "YES";
        case SearchStatus::not_found: return "NO";
        case SearchStatus::budget_exhausted: return "TIMEOUT";
        }
        return "?";
    }
};

inline Row bench_instance(const std::string & name, const Instance & inst, const std::vector<Algorithm> & algorithms,
                          std::chrono::milliseconds time_limit)
{
    Row row{name, {}, {}, false};
    const ColorLists lists = inst.effective_lists();
    std::optional<bool> verdict;
    for (Algorithm algorithm : algorithms) {
        SolveOptions options;
        options.algorithm = algorithm;
        const auto start = Clock::now();
        options.limits.deadline = start + time_limit;
        const SolveOutcome outcome = solve(inst, options);
        Cell cell;
        cell.algorithm = algorithm;
        cell.status = outcome.status;
        cell.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        cell.counter = outcome.counter;
        if (outcome.witness)
            cell.witness_valid = static_cast<bool>(
                verify_sequence(inst.graph, lists, inst.alpha, inst.beta, inst.ell, *outcome.witness));
        if (algorithm == Algorithm::fpt)
            cell.bound_ok = static_cast<double>(outcome.counter) <= fpt_call_bound(lists.palette(), inst.ell);
        if (outcome.status != SearchStatus::budget_exhausted) {
            const bool yes = outcome.status == SearchStatus::found;
            if (verdict && *verdict != yes)
                row.disagreement = true;
            verdict = yes;
        }
        row.cells.push_back(cell);
    }
    return row;
}

/// Every regular file in `directory` (sorted by name) is read as an instance.
inline Report run_bench(const std::filesystem::path & directory, const std::vector<Algorithm> & algorithms,
                        std::chrono::milliseconds time_limit)
{
    std::vector<std::filesystem::path> files;
    for (const auto & entry : std::filesystem::directory_iterator(directory))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    Report report;
    for (const auto & path : files) {
        const std::string name = path.filename().string();
        Row row;
        try {
            std::ifstream in(path);
            std::stringstream buffer;
            buffer << in.rdbuf();
            const Instance inst = io::parse_instance(buffer.str());
            row = bench_instance(name, inst, algorithms, time_limit);
        } catch (const std::exception & e) {
            row = Row{name, e.what(), {}, false};
            ++report.errors;
        }
        report.disagreements += row.disagreement;
        for (const Cell & cell : row.cells) {
            report.invalid_witnesses += !cell.witness_valid;
            report.bound_violations += !cell.bound_ok;
            report.timeouts += cell.status == SearchStatus::budget_exhausted;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace recolor::bench
