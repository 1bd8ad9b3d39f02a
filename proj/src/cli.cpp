#include <gpcp/cli.hpp>
#include <gpcp/dataset.hpp>
#include <gpcp/error.hpp>
#include <gpcp/scene.hpp>
#include <gpcp/selection.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gpcp::cli {

namespace {

namespace fs = std::filesystem;

// Writes every (path, content) pair to a sibling temp file, then renames all
// of them into place. Nothing is left behind if any write fails.
void write_atomically(const std::vector<std::pair<std::string, std::string>>& files)
{
    std::vector<fs::path> temps;
    try {
        for (const auto& [path, content] : files) {
            fs::path tmp = fs::path(path);
            tmp += ".tmp";
            temps.push_back(tmp);
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) {
                throw ValidationError("cannot write '" + tmp.string() + "'");
            }
            out.write(content.data(), static_cast<std::streamsize>(content.size()));
            out.close();
            if (!out) {
                throw ValidationError("failed writing '" + tmp.string() + "'");
            }
        }
        for (std::size_t i = 0; i < files.size(); ++i) {
            fs::rename(temps[i], files[i].first);
        }
    }
    catch (...) {
        std::error_code ec;
        for (const auto& tmp : temps) {
            fs::remove(tmp, ec);
        }
        throw;
    }
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep)) {
        parts.push_back(part);
    }
    if (!s.empty() && s.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

} // namespace

int run(const CliConfig& config, std::ostream& err)
{
    try {
        LayoutParams params{config.gap_total, config.box_width, config.scale};
        params.validate();
        RenderStyle style;
        style.alpha         = config.alpha;
        style.canvas_width  = config.width;
        style.canvas_height = config.height;
        style.show_boxes    = config.show_boxes;
        style.show_labels   = config.show_labels;
        style.validate();

        Frame frame = load_csv_file(config.input_path);
        for (const auto& [name, order] : config.level_order) {
            const auto index = frame.find(name);
            if (!index) {
                throw ValidationError("--level-order: unknown column '" + name + "'");
            }
            frame = frame.with_column(*index, set_level_order(frame.column(*index), order));
        }

        AxisSpec axis_spec = parse_spec(config.vars);
        axis_spec.group_column = config.color_by;
        const ResolvedSpec spec = resolve(axis_spec, frame);

        const Layout layout = compute_layout(frame, spec, params);
        const Grouping groups = group_sizes(frame, spec.group_index, spec);
        const auto order = draw_order(groups, config.overplot, layout, frame);
        const Scene scene = build_scene(layout, frame, order, style, spec.group_index ? &groups : nullptr);

        std::vector<std::pair<std::string, std::string>> files;
        files.emplace_back(config.output_path, emit_svg(scene, style));
        if (config.dump_layout) {
            std::ostringstream dump;
            write_layout_dump(dump, layout);
            files.emplace_back(*config.dump_layout, dump.str());
        }
        write_atomically(files);

        for (const auto& warning : layout.warnings) {
            err << "warning: " << warning << '\n';
        }
        return ExitCode::ok;
    }
    catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    }
    catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
    }
    catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return ExitCode::data_error;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generalized parallel coordinate plots for mixed numeric and categorical data"};
    app.name(args.empty() ? "gpcp" : fs::path(args.front()).filename().string());

    CliConfig config;
    std::string overplot = "hierarchical";
    std::string scale    = "axis";
    std::vector<std::string> level_orders;
    bool no_boxes  = false;
    bool no_labels = false;

    app.add_option("--input", config.input_path, "CSV input file")->required();
    app.add_option("--out", config.output_path, "SVG output file")->required();
    app.add_option("--vars", config.vars, "Axis expression, e.g. \"a,b|c,d\" ('|' marks a breakpoint)")->required();
    app.add_option("--color-by", config.color_by, "Categorical column used for line colors and groups");
    app.add_option("--overplot", overplot, "Line paint order")
        ->check(CLI::IsMember({"small-on-top", "large-on-top", "hierarchical", "data"}));
    app.add_option("--alpha", config.alpha, "Line opacity in (0, 1]");
    app.add_option("--gap-total", config.gap_total, "Share of each categorical axis used for gaps, in [0, 1)");
    app.add_option("--box-width", config.box_width, "Box width as a share of axis spacing, in (0, 1)");
    app.add_option("--scale", scale, "Numeric axis scaling")->check(CLI::IsMember({"axis", "global", "raw"}));
    app.add_option("--width", config.width, "Canvas width in pixels")->check(CLI::PositiveNumber);
    app.add_option("--height", config.height, "Canvas height in pixels")->check(CLI::PositiveNumber);
    app.add_option("--dump-layout", config.dump_layout, "Also write the layout as JSON to this path");
    app.add_option("--level-order", level_orders, "Level order for a column: COL=l1,l2,... (repeatable)");
    app.add_flag("--no-boxes", no_boxes, "Do not draw level boxes");
    app.add_flag("--no-labels", no_labels, "Do not draw level labels");

    // CLI11 consumes arguments from the back; drop the program name.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return ExitCode::usage;
    }

    auto usage_error = [&](const std::string& message) {
        err << "error: " << message << "\n\n" << app.help();
        return ExitCode::usage;
    };
    if (!(config.alpha > 0.0 && config.alpha <= 1.0)) {
        return usage_error("--alpha must be in (0, 1]");
    }
    if (!(config.gap_total >= 0.0 && config.gap_total < 1.0)) {
        return usage_error("--gap-total must be in [0, 1)");
    }
    if (!(config.box_width > 0.0 && config.box_width < 1.0)) {
        return usage_error("--box-width must be in (0, 1)");
    }
    for (const auto& spec : level_orders) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0) {
            return usage_error("--level-order expects COL=l1,l2,...; got '" + spec + "'");
        }
        config.level_order[spec.substr(0, eq)] = split(spec.substr(eq + 1), ',');
    }

    config.overplot = overplot == "small-on-top" ? DrawPolicy::SmallOnTop
                    : overplot == "large-on-top" ? DrawPolicy::LargeOnTop
                    : overplot == "data"         ? DrawPolicy::DataOrder
                                                 : DrawPolicy::Hierarchical;
    config.scale = scale == "global" ? ScaleMethod::GlobalMinMax
                 : scale == "raw"    ? ScaleMethod::Raw
                                     : ScaleMethod::PerAxisMinMax;
    config.show_boxes  = !no_boxes;
    config.show_labels = !no_labels;
    return run(config, err);
}

} // namespace gpcp::cli
