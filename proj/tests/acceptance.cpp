// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <gpcp/dataset.hpp>
#include <gpcp/draworder.hpp>
#include <gpcp/layout.hpp>
#include <gpcp/scene.hpp>
#include <gpcp/selection.hpp>

#include "support/oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>

using namespace gpcp;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome
{
    bool        pass = false;
    std::string detail;
};

constexpr std::size_t random_corpus_size = 1000;
constexpr unsigned    random_corpus_seed = 20191019;

std::vector<testkit::RandomCase> random_corpus()
{
    std::mt19937 rng(random_corpus_seed);
    std::vector<testkit::RandomCase> cases;
    cases.reserve(random_corpus_size);
    for (std::size_t i = 0; i < random_corpus_size; ++i) {
        cases.push_back(testkit::random_case(rng));
    }
    return cases;
}

// 1. Species boxes on the iris fixture.
Outcome box_geometry()
{
    const auto path = testkit::fixture_path("iris.csv");
    const auto tally = testkit::tally_column(path, "Species");
    if (tally != std::map<std::string, std::size_t>{{"setosa", 50}, {"versicolor", 50}, {"virginica", 50}}) {
        return {false, "fixture tally is not 50/50/50"};
    }

    const auto start = Clock::now();
    const Frame frame = load_csv_file(path);
    const auto spec = resolve(parse_spec("Sepal.Length,Species,Sepal.Width"), frame);
    const Layout layout = compute_layout(frame, spec);
    const double elapsed = seconds_since(start);

    const double expected[3][2] = {{0.0, 0.30}, {0.35, 0.65}, {0.70, 1.00}};
    const auto& boxes = layout.axes[1].boxes;
    if (boxes.size() != 3) {
        return {false, "expected 3 boxes"};
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (boxes[i].count != tally.at(layout.axes[1].levels[i])) {
            return {false, "box count differs from tally"};
        }
        worst = std::max({worst, std::abs(boxes[i].y0 - expected[i][0]), std::abs(boxes[i].y1 - expected[i][1])});
    }
    const bool ok = worst <= 1e-12 && elapsed < 0.050;
    return {ok, "max deviation " + std::to_string(worst) + ", runtime " + std::to_string(elapsed * 1e3) + " ms"};
}

// 2. Within each species box, y rank follows ascending Sepal.Length.
Outcome nc_ordering()
{
    const Frame frame = load_csv_file(testkit::fixture_path("iris.csv"));
    const auto spec = resolve(parse_spec("Sepal.Length,Species,Sepal.Width"), frame);
    const Layout layout = compute_layout(frame, spec);
    const auto& length  = frame.column(*frame.find("Sepal.Length")).numeric_values();
    const auto& species = frame.column(*frame.find("Species")).level_codes();

    for (LevelCode level = 0; level < 3; ++level) {
        std::vector<std::size_t> oracle;
        for (std::size_t r = 0; r < frame.n_rows(); ++r) {
            if (species[r] == level) {
                oracle.push_back(r);
            }
        }
        std::stable_sort(oracle.begin(), oracle.end(),
                         [&](std::size_t a, std::size_t b) { return length[a] < length[b]; });
        if (testkit::observed_order(layout, frame, 1, true)[level] != oracle
            || testkit::observed_order(layout, frame, 1, false)[level] != oracle) {
            return {false, "level " + std::to_string(level) + " differs from sort oracle"};
        }
    }
    return {true, "3 levels, exact match"};
}

// 3. Per-level orderings equal the naive full-key sort.
Outcome block_oracle(const std::vector<testkit::RandomCase>& corpus)
{
    const auto start = Clock::now();
    std::size_t breaks = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& c = corpus[i];
        breaks += static_cast<std::size_t>(std::count(c.spec.break_after.begin(), c.spec.break_after.end(), true));
        const Layout layout = compute_layout(c.frame, c.spec);
        const auto oracle = testkit::naive_orders(c.frame, c.spec);
        for (std::size_t a = 0; a < layout.n_axes(); ++a) {
            if (layout.axes[a].kind != ColumnKind::Categorical) {
                continue;
            }
            if (testkit::observed_order(layout, c.frame, a, true) != oracle.entry[a]
                || testkit::observed_order(layout, c.frame, a, false) != oracle.exit[a]) {
                return {false, "case " + std::to_string(i) + " axis " + std::to_string(a) + " differs"};
            }
        }
    }
    const double elapsed = seconds_since(start);
    return {elapsed < 5.0, std::to_string(corpus.size()) + " frames (" + std::to_string(breaks)
                               + " breakpoints), " + std::to_string(elapsed) + " s"};
}

// 4. No crossings between lines sharing levels at both ends of an adjacent
//    categorical pair.
Outcome non_crossing(const std::vector<testkit::RandomCase>& corpus)
{
    std::size_t pairs_checked = 0;
    std::size_t crossings = 0;
    for (const auto& c : corpus) {
        const Layout layout = compute_layout(c.frame, c.spec);
        for (const auto& block : layout.blocks) {
            for (const auto& sub : block.sub_blocks) {
                for (std::size_t a = sub.start; a < sub.end; ++a) {
                    const auto& left  = c.frame.column(layout.axes[a].column).level_codes();
                    const auto& right = c.frame.column(layout.axes[a + 1].column).level_codes();
                    for (std::size_t i = 0; i < layout.n_rows(); ++i) {
                        for (std::size_t j = i + 1; j < layout.n_rows(); ++j) {
                            if (left[i] != left[j] || right[i] != right[j]) {
                                continue;
                            }
                            ++pairs_checked;
                            const double d0 = layout.points.y_out(i, a) - layout.points.y_out(j, a);
                            const double d1 = layout.points.y_in(i, a + 1) - layout.points.y_in(j, a + 1);
                            if ((d0 > 0) != (d1 > 0) || d0 == 0 || d1 == 0) {
                                ++crossings;
                            }
                        }
                    }
                }
            }
        }
    }
    return {crossings == 0 && pairs_checked > 0,
            std::to_string(crossings) + " crossings in " + std::to_string(pairs_checked) + " line pairs"};
}

// 5. Titanic-style block with two breakpoints.
Outcome breakpoint_conservation()
{
    const auto path = testkit::fixture_path("titanic.csv");
    const auto start = Clock::now();
    const Frame frame = load_csv_file(path);
    const auto spec = resolve(parse_spec("Sex,Age|Class|Survived"), frame);
    const Layout layout = compute_layout(frame, spec);
    const double elapsed = seconds_since(start);

    if (frame.n_rows() != 2201) {
        return {false, "fixture has " + std::to_string(frame.n_rows()) + " rows"};
    }
    for (std::size_t a = 0; a < layout.n_axes(); ++a) {
        const auto tally = testkit::tally_column(path, layout.axes[a].name);
        for (const auto& box : layout.axes[a].boxes) {
            if (box.count != tally.at(layout.axes[a].levels[box.level])) {
                return {false, "box count differs from tally on axis " + std::to_string(a)};
            }
        }
    }

    std::size_t checked_axes = 0;
    for (std::size_t a = 0; a < layout.n_axes(); ++a) {
        if (!layout.axes[a].break_after) {
            continue;
        }
        ++checked_axes;
        const auto& codes = frame.column(layout.axes[a].column).level_codes();
        for (const auto& box : layout.axes[a].boxes) {
            std::vector<double> in, out;
            for (std::size_t r = 0; r < frame.n_rows(); ++r) {
                if (codes[r] != box.level) {
                    continue;
                }
                const double yi = layout.points.y_in(r, a);
                const double yo = layout.points.y_out(r, a);
                if (yi < box.y0 || yi > box.y1 || yo < box.y0 || yo > box.y1) {
                    return {false, "in-box segment leaves its box on axis " + std::to_string(a)};
                }
                in.push_back(yi);
                out.push_back(yo);
            }
            std::sort(in.begin(), in.end());
            std::sort(out.begin(), out.end());
            if (in != out) {
                return {false, "entry/exit multisets differ on axis " + std::to_string(a)};
            }
        }
    }
    const bool ok = checked_axes == 2 && elapsed < 1.0;
    return {ok, std::to_string(checked_axes) + " breakpoint axes, runtime " + std::to_string(elapsed * 1e3) + " ms"};
}

// 6. Draw-order contracts.
Outcome draw_order_contracts(const std::vector<testkit::RandomCase>& corpus)
{
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& c = corpus[i];
        const Layout layout = compute_layout(c.frame, c.spec);
        const auto groups = group_sizes(c.frame, c.spec.group_index, c.spec);
        const std::size_t n = c.frame.n_rows();

        auto sequence = [&](const std::vector<std::size_t>& order) {
            std::vector<std::size_t> seq;
            for (std::size_t r : order) {
                if (seq.empty() || seq.back() != groups.group_of_row[r]) {
                    seq.push_back(groups.group_of_row[r]);
                }
            }
            return seq;
        };
        auto within_group_ascending = [&](const std::vector<std::size_t>& order) {
            std::vector<std::size_t> last(groups.n_groups(), n);
            for (std::size_t r : order) {
                auto& prev = last[groups.group_of_row[r]];
                if (prev != n && prev > r) {
                    return false;
                }
                prev = r;
            }
            return true;
        };

        const auto small = draw_order(groups, DrawPolicy::SmallOnTop, layout, c.frame);
        const auto large = draw_order(groups, DrawPolicy::LargeOnTop, layout, c.frame);
        auto reversed = sequence(large);
        std::reverse(reversed.begin(), reversed.end());
        const auto small_seq = sequence(small);
        if (small_seq != reversed || small_seq.size() != static_cast<std::size_t>(std::count_if(
                groups.sizes.begin(), groups.sizes.end(), [](std::size_t s) { return s > 0; }))
            || !within_group_ascending(small) || !within_group_ascending(large)) {
            return {false, "case " + std::to_string(i) + ": size policies are not group-reversed"};
        }

        // Hierarchical oracle: materialized level tuples, row index last.
        std::vector<std::vector<std::size_t>> keys(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t col : c.spec.axis_columns) {
                if (c.frame.column(col).is_categorical()) {
                    keys[r].push_back(c.frame.column(col).level_codes()[r]);
                }
            }
            keys[r].push_back(r);
        }
        std::vector<std::size_t> expected(n);
        std::iota(expected.begin(), expected.end(), std::size_t{0});
        std::stable_sort(expected.begin(), expected.end(),
                         [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
        if (draw_order(groups, DrawPolicy::Hierarchical, layout, c.frame) != expected) {
            return {false, "case " + std::to_string(i) + ": hierarchical order differs from oracle"};
        }

        std::vector<std::size_t> identity(n);
        std::iota(identity.begin(), identity.end(), std::size_t{0});
        if (draw_order(groups, DrawPolicy::DataOrder, layout, c.frame) != identity) {
            return {false, "case " + std::to_string(i) + ": data order is not the identity"};
        }
    }
    return {true, std::to_string(corpus.size()) + " frames, 4 policies"};
}

std::uint64_t fnv1a(const std::string& bytes)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : bytes) {
        h = (h ^ ch) * 1099511628211ull;
    }
    return h;
}

// 7. Two CLI runs, identical bytes.
Outcome cli_determinism(const std::string& cli_path)
{
    const fs::path dir = fs::temp_directory_path() / "gpcp_acceptance_determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);

    std::uint64_t hashes[2][2] = {};
    for (int run = 0; run < 2; ++run) {
        const auto svg  = (dir / ("run" + std::to_string(run) + ".svg")).string();
        const auto dump = (dir / ("run" + std::to_string(run) + ".json")).string();
        const std::string cmd = "\"" + cli_path + "\" --input \"" + testkit::fixture_path("titanic.csv")
                              + "\" --vars \"Sex,Age|Class|Survived\" --color-by Survived --overplot small-on-top"
                              + " --out \"" + svg + "\" --dump-layout \"" + dump + "\"";
        if (std::system(cmd.c_str()) != 0) {
            fs::remove_all(dir);
            return {false, "CLI run failed: " + cmd};
        }
        hashes[run][0] = fnv1a(testkit::read_file(svg));
        hashes[run][1] = fnv1a(testkit::read_file(dump));
    }
    fs::remove_all(dir);
    const bool ok = hashes[0][0] == hashes[1][0] && hashes[0][1] == hashes[1][1];
    char detail[96];
    std::snprintf(detail, sizeof detail, "svg %016llx, dump %016llx", static_cast<unsigned long long>(hashes[0][0]),
                  static_cast<unsigned long long>(hashes[0][1]));
    return {ok, detail};
}

// 8. 10,000 rows x 10 axes.
Outcome scale()
{
    std::mt19937 rng(8);
    constexpr std::size_t n = 10000;
    std::vector<Column> columns;
    ResolvedSpec spec;
    for (int j = 0; j < 5; ++j) {
        std::normal_distribution<double> normal(0.0, 1.0 + j);
        std::vector<double> values(n);
        for (auto& v : values) {
            v = normal(rng);
        }
        columns.push_back(Column::numeric("num" + std::to_string(j), values));

        std::vector<std::string> labels(n);
        for (auto& l : labels) {
            l = "L" + std::to_string(rng() % (2 + j));
        }
        columns.push_back(Column::categorical_from_labels("cat" + std::to_string(j), labels));
    }
    const Frame frame(std::move(columns));
    // N C C N C N C N C N-style interleaving with one two-axis factor block.
    spec.axis_columns = {0, 1, 3, 2, 5, 4, 7, 6, 9, 8};
    spec.break_after.assign(spec.axis_columns.size(), false);
    spec.group_index = 3;

    auto start = Clock::now();
    const Layout layout = compute_layout(frame, spec);
    const double layout_s = seconds_since(start);

    start = Clock::now();
    const auto groups = group_sizes(frame, spec.group_index, spec);
    const auto order = draw_order(groups, DrawPolicy::Hierarchical, layout, frame);
    const Scene scene = build_scene(layout, frame, order, RenderStyle{}, &groups);
    const std::string svg = emit_svg(scene, RenderStyle{});
    const double svg_s = seconds_since(start);

    const auto elements = testkit::xml_element_count(svg);
    const bool valid = elements && *elements == scene.items.size() + 2;
    const bool ok = layout_s < 1.0 && svg_s < 3.0 && valid;
    return {ok, "layout " + std::to_string(layout_s) + " s, svg " + std::to_string(svg_s) + " s ("
                    + std::to_string(svg.size() / 1024) + " KiB, " + (valid ? "valid" : "INVALID") + ")"};
}

} // namespace

int main(int argc, char** argv)
{
    const std::string cli_path = argc > 1 ? argv[1] : GPCP_CLI_PATH;
    const auto corpus = random_corpus();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1. box geometry (iris species boxes)", box_geometry},
        {"2. N-C ordering (iris, ascending Sepal.Length)", nc_ordering},
        {"3. factor-block ordering oracle (1000 random frames)", [&] { return block_oracle(corpus); }},
        {"4. within-pair non-crossing", [&] { return non_crossing(corpus); }},
        {"5. breakpoint conservation (titanic, 2201 rows)", breakpoint_conservation},
        {"6. draw-order contracts", [&] { return draw_order_contracts(corpus); }},
        {"7. CLI determinism", [&] { return cli_determinism(cli_path); }},
        {"8. scale (10000 rows x 10 axes)", scale},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome outcome;
        try {
            outcome = check();
        }
        catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << outcome.detail << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
