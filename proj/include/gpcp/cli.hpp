#pragma once

#include <gpcp/draworder.hpp>
#include <gpcp/layout.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gpcp::cli {

enum ExitCode : int {
    ok         = 0,
    usage      = 1,
    data_error = 2,
};

struct CliConfig
{
    std::string                input_path;
    std::string                output_path;
    std::string                vars;
    std::optional<std::string> color_by;
    DrawPolicy                 overplot  = DrawPolicy::Hierarchical;
    double                     alpha     = 0.6;
    double                     gap_total = 0.10;
    double                     box_width = 0.1;
    ScaleMethod                scale     = ScaleMethod::PerAxisMinMax;
    int                        width     = 900;
    int                        height    = 600;
    std::optional<std::string> dump_layout;
    std::map<std::string, std::vector<std::string>> level_order;
    bool                       show_boxes  = true;
    bool                       show_labels = true;
};

/// Runs the full pipeline: load, resolve, layout, order, render, write.
/// Outputs are written to a temporary file and renamed into place, so a
/// failed run leaves no partial files behind.
int run(const CliConfig& config, std::ostream& err);

/// Parses `args` (program name first) and runs. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gpcp::cli
