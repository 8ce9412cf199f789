#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "ccbench/bench.hpp"
#include "ccbench/csv.hpp"
#include "ccbench/error.hpp"
#include "ccbench/io.hpp"

namespace ccbench {

namespace fs = std::filesystem;

OutputFormat output_format_from_string(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "svg") return OutputFormat::svg;
    if (text == "both") return OutputFormat::both;
    throw InputError(fmt::format("unknown output format '{}' (expected csv, svg or both)", text));
}

namespace {

std::string full(double v) { return fmt::format("{:.17g}", v); }
std::string two(double v) { return fmt::format("{:.2f}", v); }

std::string favored(const PairwiseEntry& entry) {
    if (!entry.result) return "none";
    switch (entry.result->direction) {
        case Direction::x_greater: return entry.tool_a;
        case Direction::y_greater: return entry.tool_b;
        case Direction::none: return "none";
    }
    return "none";
}

std::vector<std::size_t> tool_order(const ResultBundle& bundle) {
    if (bundle.ranks) return bundle.ranks->order();
    std::vector<std::size_t> idx(bundle.tools.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return idx;
}

std::string f1_table_csv(const ResultBundle& b) {
    std::vector<std::string> header{"tool"};
    header.insert(header.end(), b.systems.begin(), b.systems.end());
    std::string out = csv_line(header);
    for (std::size_t t = 0; t < b.f1.rows(); ++t) {
        std::vector<std::string> row{b.f1.row_labels[t]};
        for (std::size_t s = 0; s < b.f1.cols(); ++s) row.push_back(two(b.f1(t, s)));
        out += csv_line(row);
    }
    return out;
}

std::string metrics_csv(const ResultBundle& b) {
    std::string out = csv_line({"tool", "system", "n_targets", "avg_recall", "avg_precision", "f1"});
    for (const auto& m : b.metrics) {
        out += csv_line({m.tool_id, m.system_id, std::to_string(m.n_targets), full(m.avg_recall),
                         full(m.avg_precision), full(m.f1)});
    }
    return out;
}

std::string rank_table_csv(const ResultBundle& b) {
    std::vector<std::string> header{"tool"};
    header.insert(header.end(), b.systems.begin(), b.systems.end());
    for (const char* c : {"rank_sum", "final_rank", "tie"}) header.emplace_back(c);
    std::string out = csv_line(header);
    if (!b.ranks) return out;
    const auto& r = *b.ranks;
    for (std::size_t t : r.order()) {
        std::vector<std::string> row{r.tools[t]};
        for (std::size_t s = 0; s < r.systems.size(); ++s) row.push_back(fmt::format("{:g}", r.per_system_rank(t, s)));
        row.push_back(fmt::format("{:g}", r.rank_sum[t]));
        row.push_back(std::to_string(r.final_rank[t]));
        row.push_back(r.tie[t] ? "true" : "false");
        out += csv_line(row);
    }
    return out;
}

std::string significance_csv(const ResultBundle& b) {
    std::string out = csv_line({"tool_a", "tool_b", "n_effective", "w_plus", "w_minus", "statistic_w", "p_value",
                                "mode", "significant", "direction", "no_information"});
    if (!b.significance) return out;
    for (const auto& e : b.significance->entries) {
        if (e.result) {
            const auto& r = *e.result;
            out += csv_line({e.tool_a, e.tool_b, std::to_string(r.n_effective), fmt::format("{:g}", r.w_plus),
                             fmt::format("{:g}", r.w_minus), fmt::format("{:g}", r.statistic_w), full(r.p_value),
                             std::string(to_string(r.mode)), e.significant ? "true" : "false", favored(e), "false"});
        } else {
            out += csv_line({e.tool_a, e.tool_b, "0", "", "", "", "", "", "false", "none", "true"});
        }
    }
    return out;
}

std::string significance_summary_csv(const ResultBundle& b) {
    std::string out = csv_line({"tool", "better_than", "count"});
    if (!b.significance) return out;
    const auto& sig = *b.significance;
    for (std::size_t t : tool_order(b)) {
        std::string beaten;
        for (const auto& name : sig.better_than[t]) {
            if (!beaten.empty()) beaten += ';';
            beaten += name;
        }
        out += csv_line({sig.tools[t], beaten, std::to_string(sig.count_better(t))});
    }
    return out;
}

std::string coverage_csv(const ResultBundle& b) {
    std::string out = csv_line(
        {"scope", "tool", "fragments", "unique_lines", "norm_fragments", "norm_unique_lines", "degenerate"});
    for (const auto& c : b.coverage) {
        out += csv_line({c.scope, c.stats.tool_id, std::to_string(c.stats.fragment_count),
                         std::to_string(c.stats.unique_line_count), full(c.norm_fragments), full(c.norm_unique_lines),
                         c.degenerate ? "true" : "false"});
    }
    return out;
}

std::string summary_csv(const ResultBundle& b) {
    std::string out = csv_line({"system", "atc", "ccc", "pct_atc", "pct_ccc"});
    if (b.summary.rows.empty()) return out;
    for (const auto& row : b.summary.rows) {
        out += csv_line({row.system_id, std::to_string(row.atc), std::to_string(row.ccc), two(row.pct_atc),
                         two(row.pct_ccc)});
    }
    const bool any_atc = b.summary.total_atc > 0;
    const bool any_ccc = b.summary.total_ccc > 0;
    out += csv_line({"Total", std::to_string(b.summary.total_atc), std::to_string(b.summary.total_ccc),
                     any_atc ? "100.00" : "0.00", any_ccc ? "100.00" : "0.00"});
    return out;
}

std::string audit_csv(const ResultBundle& b) {
    std::string out = csv_line({"system", "tool", "target", "tp", "fp", "fn", "pcc_size", "ccc_size"});
    for (const auto& row : b.audit) {
        const auto& c = row.counts;
        out += csv_line({row.system_id, c.tool_id, c.target_id, std::to_string(c.tp), std::to_string(c.fp),
                         std::to_string(c.fn), std::to_string(c.pcc_size), std::to_string(c.ccc_size)});
    }
    return out;
}

// ---------------------------------------------------------------- SVG

std::string xml_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
                                    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1f77b4", "#8c564b"};

class Svg {
public:
    Svg(double width, double height) : width_(width), height_(height) {}

    void text(double x, double y, std::string_view content, std::string_view anchor = "middle", int size = 12,
              double rotate = 0.0) {
        body_ += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"{}\" text-anchor=\"{}\"", x, y, size, anchor);
        if (rotate != 0.0) body_ += fmt::format(" transform=\"rotate({:g} {:.1f} {:.1f})\"", rotate, x, y);
        body_ += fmt::format(">{}</text>\n", xml_escape(content));
    }

    void line(double x1, double y1, double x2, double y2, std::string_view stroke = "#333") {
        body_ += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"{}\"/>\n", x1, y1,
                             x2, y2, stroke);
    }

    void rect(double x, double y, double w, double h, std::string_view fill, std::string_view data = {}) {
        body_ += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\"", x, y, w,
                             h, fill);
        if (!data.empty()) body_ += fmt::format(" {}", data);
        body_ += "/>\n";
    }

    void raw(std::string_view s) { body_ += s; }

    std::string str() const {
        return fmt::format(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:g}\" height=\"{1:g}\" viewBox=\"0 0 {0:g} {1:g}\">\n"
            "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{2}</svg>\n",
            width_, height_, body_);
    }

private:
    double width_;
    double height_;
    std::string body_;
};

struct Frame {
    double left = 70, top = 40, width = 0, height = 260;
    double y_max = 1.0;

    double y(double v) const { return top + height - (y_max <= 0 ? 0 : v / y_max * height); }
};

void axes(Svg& svg, const Frame& f, std::string_view title, std::string_view y_label) {
    svg.text(f.left + f.width / 2, 22, title, "middle", 15);
    svg.line(f.left, f.top, f.left, f.top + f.height);
    svg.line(f.left, f.top + f.height, f.left + f.width, f.top + f.height);
    for (int i = 0; i <= 5; ++i) {
        const double v = f.y_max * i / 5.0;
        svg.line(f.left - 4, f.y(v), f.left, f.y(v));
        svg.text(f.left - 7, f.y(v) + 4, fmt::format("{:.2f}", v), "end", 10);
    }
    svg.text(18, f.top + f.height / 2, y_label, "middle", 12, -90);
}

// Grouped bars: one group per system, one bar per tool.
std::string bar_chart(const LabeledMatrix& m, std::string_view title, std::string_view y_label) {
    Frame f;
    const double bar = 10.0;
    const double group = std::max<double>(1.0, static_cast<double>(m.rows())) * bar + 16.0;
    f.width = std::max(200.0, group * static_cast<double>(m.cols()));
    f.y_max = 1.0;
    for (double v : m.values) f.y_max = std::max(f.y_max, v);
    const double legend_w = 150.0;
    Svg svg(f.left + f.width + legend_w, f.top + f.height + 60);
    axes(svg, f, title, y_label);
    for (std::size_t s = 0; s < m.cols(); ++s) {
        const double gx = f.left + 8 + group * static_cast<double>(s);
        for (std::size_t t = 0; t < m.rows(); ++t) {
            const double v = m(t, s);
            svg.rect(gx + bar * static_cast<double>(t), f.y(v), bar - 1, f.top + f.height - f.y(v),
                     kPalette[t % std::size(kPalette)],
                     fmt::format("data-tool=\"{}\" data-system=\"{}\" data-value=\"{:.17g}\"",
                                 xml_escape(m.row_labels[t]), xml_escape(m.col_labels[s]), v));
        }
        svg.text(gx + (group - 16) / 2, f.top + f.height + 16, m.col_labels[s], "middle", 11);
    }
    for (std::size_t t = 0; t < m.rows(); ++t) {
        const double ly = f.top + 14.0 * static_cast<double>(t);
        svg.rect(f.left + f.width + 14, ly, 10, 10, kPalette[t % std::size(kPalette)]);
        svg.text(f.left + f.width + 30, ly + 9, m.row_labels[t], "start", 11);
    }
    return svg.str();
}

double quantile(std::vector<double> sorted, double q) {
    if (sorted.empty()) return 0.0;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

// Box per tool over its per-system F1 values, left to right by final rank.
std::string box_plot(const ResultBundle& b) {
    Frame f;
    const double slot = 56.0;
    const auto order = tool_order(b);
    f.width = std::max(200.0, slot * static_cast<double>(order.size()));
    f.y_max = 1.0;
    for (double v : b.f1.values) f.y_max = std::max(f.y_max, v);
    Svg svg(f.left + f.width + 20, f.top + f.height + 80);
    axes(svg, f, "F1 per system, tools by final rank", "F1");
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const std::size_t t = order[pos];
        auto values = b.f1.row(t);
        std::sort(values.begin(), values.end());
        const double q1 = quantile(values, 0.25), med = quantile(values, 0.5), q3 = quantile(values, 0.75);
        const double lo = values.empty() ? 0.0 : values.front();
        const double hi = values.empty() ? 0.0 : values.back();
        const double cx = f.left + slot * (static_cast<double>(pos) + 0.5);
        const int rank = b.ranks ? b.ranks->final_rank[t] : static_cast<int>(pos + 1);
        svg.raw(fmt::format("<g data-tool=\"{}\" data-rank=\"{}\" data-min=\"{:.17g}\" data-q1=\"{:.17g}\" "
                            "data-median=\"{:.17g}\" data-q3=\"{:.17g}\" data-max=\"{:.17g}\">\n",
                            xml_escape(b.f1.row_labels[t]), rank, lo, q1, med, q3, hi));
        svg.line(cx, f.y(lo), cx, f.y(q1));
        svg.line(cx, f.y(q3), cx, f.y(hi));
        svg.line(cx - 8, f.y(lo), cx + 8, f.y(lo));
        svg.line(cx - 8, f.y(hi), cx + 8, f.y(hi));
        svg.rect(cx - 16, f.y(q3), 32, std::max(0.5, f.y(q1) - f.y(q3)), kPalette[t % std::size(kPalette)]);
        svg.line(cx - 16, f.y(med), cx + 16, f.y(med), "#000");
        svg.raw("</g>\n");
        svg.text(cx, f.top + f.height + 14, b.f1.row_labels[t], "end", 11, -40);
    }
    return svg.str();
}

std::string coverage_chart(const ResultBundle& b) {
    std::vector<const CoverageRow*> rows;
    for (const auto& c : b.coverage) {
        if (c.scope == "ALL") rows.push_back(&c);
    }
    Frame f;
    const double slot = 40.0;
    f.width = std::max(200.0, slot * static_cast<double>(rows.size()));
    Svg svg(f.left + f.width + 170, f.top + f.height + 80);
    axes(svg, f, "Normalized clone coverage, all systems", "normalized value");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& c = *rows[i];
        const double x = f.left + slot * static_cast<double>(i) + 6;
        svg.rect(x, f.y(c.norm_fragments), 13, f.top + f.height - f.y(c.norm_fragments), kPalette[0],
                 fmt::format("data-tool=\"{}\" data-measure=\"fragments\" data-value=\"{:.17g}\"",
                             xml_escape(c.stats.tool_id), c.norm_fragments));
        svg.rect(x + 14, f.y(c.norm_unique_lines), 13, f.top + f.height - f.y(c.norm_unique_lines), kPalette[1],
                 fmt::format("data-tool=\"{}\" data-measure=\"unique_lines\" data-value=\"{:.17g}\"",
                             xml_escape(c.stats.tool_id), c.norm_unique_lines));
        svg.text(x + 14, f.top + f.height + 14, c.stats.tool_id, "end", 11, -40);
    }
    svg.rect(f.left + f.width + 14, f.top, 10, 10, kPalette[0]);
    svg.text(f.left + f.width + 30, f.top + 9, "fragments", "start", 11);
    svg.rect(f.left + f.width + 14, f.top + 14, 10, 10, kPalette[1]);
    svg.text(f.left + f.width + 30, f.top + 23, "unique lines", "start", 11);
    return svg.str();
}

}  // namespace

std::string render_table(const ResultBundle& bundle, std::string_view name) {
    if (name == "f1_table.csv") return f1_table_csv(bundle);
    if (name == "metrics.csv") return metrics_csv(bundle);
    if (name == "rank_table.csv") return rank_table_csv(bundle);
    if (name == "significance.csv") return significance_csv(bundle);
    if (name == "significance_summary.csv") return significance_summary_csv(bundle);
    if (name == "coverage.csv") return coverage_csv(bundle);
    if (name == "summary.csv") return summary_csv(bundle);
    if (name == "audit.csv") return audit_csv(bundle);
    if (name == "recall.svg") return bar_chart(bundle.recall, "Average recall per system", "average recall");
    if (name == "precision.svg") return bar_chart(bundle.precision, "Average precision per system", "average precision");
    if (name == "f1_boxplot.svg") return box_plot(bundle);
    if (name == "coverage.svg") return coverage_chart(bundle);
    throw InputError(fmt::format("unknown artifact '{}'", name));
}

void write_staged(const fs::path& out_dir, const std::vector<std::pair<std::string, std::string>>& files) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir)) {
        throw InputError(fmt::format("cannot create output directory '{}'", out_dir.string()));
    }
    for (const auto& [name, content] : files) {
        if (fs::is_directory(out_dir / name)) {
            throw InputError(fmt::format("output path '{}' is a directory", (out_dir / name).string()));
        }
    }
    std::vector<fs::path> staged;
    std::size_t renamed = 0;
    auto roll_back = [&] {
        for (std::size_t i = renamed; i < staged.size(); ++i) fs::remove(staged[i], ec);
        for (std::size_t i = 0; i < renamed; ++i) fs::remove(out_dir / files[i].first, ec);
    };
    try {
        for (const auto& [name, content] : files) {
            staged.push_back(out_dir / (name + ".partial"));
            write_text_file(staged.back(), content);
        }
        for (; renamed < files.size(); ++renamed) fs::rename(staged[renamed], out_dir / files[renamed].first);
    } catch (const fs::filesystem_error& e) {
        roll_back();
        throw InputError(fmt::format("writing outputs to '{}' failed: {}", out_dir.string(), e.what()));
    } catch (...) {
        roll_back();
        throw;
    }
}

std::vector<std::string> emit_report(const ResultBundle& bundle, const fs::path& out_dir, OutputFormat format) {
    std::vector<std::string> names;
    if (format != OutputFormat::svg) {
        names.insert(names.end(), {"f1_table.csv", "metrics.csv", "rank_table.csv", "significance.csv",
                                   "significance_summary.csv", "coverage.csv", "summary.csv", "audit.csv"});
    }
    if (format != OutputFormat::csv) {
        names.insert(names.end(), {"recall.svg", "precision.svg", "f1_boxplot.svg", "coverage.svg"});
    }
    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& name : names) files.emplace_back(name, render_table(bundle, name));
    write_staged(out_dir, files);
    return names;
}

namespace {

double parse_number(const std::string& text, const fs::path& path, std::size_t line) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
        throw ParseError(fmt::format("{}:{}", path.string(), line), fmt::format("'{}' is not a number", text));
    }
    return v;
}

}  // namespace

LabeledMatrix read_matrix_csv(const fs::path& path, const std::string& value_column) {
    const auto rows = parse_csv(read_text_file(path));
    if (rows.empty()) throw ParseError(path.string(), "empty matrix file");
    const auto& header = rows.front().fields;
    const auto col = [&](std::string_view name) -> std::optional<std::size_t> {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) return std::nullopt;
        return static_cast<std::size_t>(it - header.begin());
    };

    if (auto tool_col = col("tool"), sys_col = col("system"), val_col = col(value_column);
        tool_col && sys_col && val_col) {
        std::vector<std::string> tools, systems;
        std::map<std::pair<std::string, std::string>, double> cells;
        for (std::size_t r = 1; r < rows.size(); ++r) {
            const auto& f = rows[r].fields;
            if (f.size() != header.size()) {
                throw ParseError(fmt::format("{}:{}", path.string(), rows[r].line),
                                 fmt::format("expected {} fields, got {}", header.size(), f.size()));
            }
            const auto& tool = f[*tool_col];
            const auto& system = f[*sys_col];
            if (std::find(tools.begin(), tools.end(), tool) == tools.end()) tools.push_back(tool);
            if (std::find(systems.begin(), systems.end(), system) == systems.end()) systems.push_back(system);
            if (!cells.emplace(std::pair{tool, system}, parse_number(f[*val_col], path, rows[r].line)).second) {
                throw ParseError(fmt::format("{}:{}", path.string(), rows[r].line),
                                 fmt::format("duplicate cell ({}, {})", tool, system));
            }
        }
        LabeledMatrix m(tools, systems);
        for (std::size_t t = 0; t < tools.size(); ++t) {
            for (std::size_t s = 0; s < systems.size(); ++s) {
                auto it = cells.find({tools[t], systems[s]});
                if (it == cells.end()) {
                    throw ParseError(path.string(), fmt::format("missing cell ({}, {})", tools[t], systems[s]));
                }
                m(t, s) = it->second;
            }
        }
        return m;
    }

    if (header.size() < 2) throw ParseError(path.string(), "wide matrix needs a label column and at least one value column");
    std::vector<std::string> systems(header.begin() + 1, header.end());
    std::vector<std::string> tools;
    std::vector<double> values;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& f = rows[r].fields;
        if (f.size() != header.size()) {
            throw ParseError(fmt::format("{}:{}", path.string(), rows[r].line),
                             fmt::format("expected {} fields, got {}", header.size(), f.size()));
        }
        if (std::find(tools.begin(), tools.end(), f[0]) != tools.end()) {
            throw ParseError(fmt::format("{}:{}", path.string(), rows[r].line), fmt::format("duplicate row '{}'", f[0]));
        }
        tools.push_back(f[0]);
        for (std::size_t c = 1; c < f.size(); ++c) values.push_back(parse_number(f[c], path, rows[r].line));
    }
    LabeledMatrix m(tools, systems);
    m.values = std::move(values);
    return m;
}

ResultBundle load_bundle(const fs::path& out_dir) {
    ResultBundle b;
    const auto metrics_path = out_dir / "metrics.csv";
    const auto rows = parse_csv(read_text_file(metrics_path));
    if (rows.empty()) throw ParseError(metrics_path.string(), "empty file");
    const std::vector<std::string> expected{"tool", "system", "n_targets", "avg_recall", "avg_precision", "f1"};
    if (rows.front().fields != expected) throw ParseError(metrics_path.string() + ":1", "unexpected header");
    if (rows.size() > 1) {
        b.recall = read_matrix_csv(metrics_path, "avg_recall");
        b.precision = read_matrix_csv(metrics_path, "avg_precision");
        b.f1 = read_matrix_csv(metrics_path, "f1");
        b.tools = b.f1.row_labels;
        b.systems = b.f1.col_labels;
        b.ranks = aggregate_ranks(rank_per_system(b.f1));
    }
    const auto coverage_path = out_dir / "coverage.csv";
    if (fs::is_regular_file(coverage_path)) {
        const auto cov = parse_csv(read_text_file(coverage_path));
        for (std::size_t r = 1; r < cov.size(); ++r) {
            const auto& f = cov[r].fields;
            if (f.size() != 7) throw ParseError(fmt::format("{}:{}", coverage_path.string(), cov[r].line), "expected 7 fields");
            CoverageRow row;
            row.scope = f[0];
            row.stats.tool_id = f[1];
            row.stats.system_id = f[0];
            row.stats.fragment_count = static_cast<std::size_t>(parse_number(f[2], coverage_path, cov[r].line));
            row.stats.unique_line_count = static_cast<std::size_t>(parse_number(f[3], coverage_path, cov[r].line));
            row.norm_fragments = parse_number(f[4], coverage_path, cov[r].line);
            row.norm_unique_lines = parse_number(f[5], coverage_path, cov[r].line);
            row.degenerate = f[6] == "true";
            b.coverage.push_back(std::move(row));
        }
    }
    return b;
}

}  // namespace ccbench
