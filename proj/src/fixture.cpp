#include "ccbench/fixture.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <tuple>

#include "ccbench/clone_ingest.hpp"
#include "ccbench/core_model.hpp"
#include "ccbench/error.hpp"
#include "ccbench/io.hpp"

namespace ccbench {

namespace {

constexpr LineNo kSlotLines = 10;

// mt19937_64 output is fixed by the standard; the standard distributions are
// not, so bounded draws and shuffles are done by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t draw = engine_();
        while (draw >= limit) draw = engine_();
        return draw % bound;
    }

    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

struct Slot {
    std::size_t file = 0;
    std::size_t index = 0;

    auto operator<=>(const Slot&) const = default;
};

struct Edit {
    LineNo first = 2;  // slot-relative, within 2..9
    LineNo last = 2;
};

std::string file_name(std::size_t file) {
    static constexpr const char* kExtensions[] = {".c", ".h", ".java"};
    return fmt::format("src/f{:02}{}", file, kExtensions[file % 3]);
}

LineNo slot_start(const Slot& slot) { return static_cast<LineNo>(slot.index) * kSlotLines + 1; }

FileAnchor slot_anchor(const Slot& slot) {
    return {file_name(slot.file), {slot_start(slot), slot_start(slot) + kSlotLines - 1}};
}

std::string line_text(std::size_t file, LineNo line, std::string_view value) {
    return fmt::format("int v_{}_{} = {};", file, line, value);
}

std::string revision_id(std::size_t ordinal) { return fmt::format("r{}", ordinal + 1); }

std::string revision_dir(std::size_t ordinal) { return fmt::format("{:03}_{}", ordinal + 1, revision_id(ordinal)); }

std::string render(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace

void FixtureSpec::validate() const {
    if (class_size_min < 2) throw InputError("fixture: class_size_min must be at least 2");
    if (class_size_max < class_size_min) throw InputError("fixture: class_size_max is below class_size_min");
    if (n_revisions == 0) throw InputError("fixture: n_revisions must be at least 1");
    if (n_files == 0) throw InputError("fixture: n_files must be at least 1");
    if (system_id.empty() || system_id.find('/') != std::string::npos) {
        throw InputError(fmt::format("fixture: invalid system id '{}'", system_id));
    }
}

nlohmann::ordered_json FixtureManifest::to_json() const {
    nlohmann::ordered_json doc;
    doc["seed"] = spec.seed;
    doc["system"] = spec.system_id;
    doc["n_revisions"] = spec.n_revisions;
    doc["n_files"] = spec.n_files;
    doc["n_classes"] = spec.n_classes;
    doc["class_size_min"] = spec.class_size_min;
    doc["class_size_max"] = spec.class_size_max;
    doc["cochange_edits"] = spec.cochange_edits;
    doc["noise_edits"] = spec.noise_edits;
    doc["revisions"] = revisions;
    doc["atc"] = atc;
    doc["ccc"] = ccc;
    doc["tools"] = nlohmann::ordered_json::array();
    for (const auto& tool : tools) {
        doc["tools"].push_back({{"tool", tool.tool_id},
                                {"n_targets", tool.n_targets},
                                {"avg_recall", tool.avg_recall},
                                {"avg_precision", tool.avg_precision},
                                {"f1", tool.f1}});
    }
    doc["targets"] = nlohmann::ordered_json::array();
    for (const auto& t : targets) {
        doc["targets"].push_back({{"tool", t.tool_id},
                                  {"target", t.target_id},
                                  {"tp", t.tp},
                                  {"fp", t.fp},
                                  {"fn", t.fn},
                                  {"pcc_size", t.pcc_size},
                                  {"ccc_size", t.ccc_size}});
    }
    return doc;
}

FixtureManifest FixtureManifest::from_json(const nlohmann::json& doc) {
    try {
        FixtureManifest m;
        m.spec.seed = doc.at("seed").get<std::uint64_t>();
        m.spec.system_id = doc.at("system").get<std::string>();
        m.spec.n_revisions = doc.at("n_revisions").get<std::size_t>();
        m.spec.n_files = doc.at("n_files").get<std::size_t>();
        m.spec.n_classes = doc.at("n_classes").get<std::size_t>();
        m.spec.class_size_min = doc.at("class_size_min").get<std::size_t>();
        m.spec.class_size_max = doc.at("class_size_max").get<std::size_t>();
        m.spec.cochange_edits = doc.at("cochange_edits").get<std::size_t>();
        m.spec.noise_edits = doc.at("noise_edits").get<std::size_t>();
        m.revisions = doc.at("revisions").get<std::vector<std::string>>();
        m.atc = doc.at("atc").get<std::size_t>();
        m.ccc = doc.at("ccc").get<std::size_t>();
        for (const auto& tool : doc.at("tools")) {
            m.tools.push_back({tool.at("tool").get<std::string>(), tool.at("n_targets").get<std::size_t>(),
                               tool.at("avg_recall").get<double>(), tool.at("avg_precision").get<double>(),
                               tool.at("f1").get<double>()});
        }
        for (const auto& t : doc.at("targets")) {
            m.targets.push_back({t.at("tool").get<std::string>(), t.at("target").get<std::string>(),
                                 t.at("tp").get<std::size_t>(), t.at("fp").get<std::size_t>(),
                                 t.at("fn").get<std::size_t>(), t.at("pcc_size").get<std::size_t>(),
                                 t.at("ccc_size").get<std::size_t>()});
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(fmt::format("malformed fixture manifest: {}", e.what()));
    }
}

FixtureManifest generate_fixture(const FixtureSpec& spec, const std::filesystem::path& out_dir) {
    spec.validate();
    std::error_code ec;
    if (std::filesystem::exists(out_dir) && !std::filesystem::is_empty(out_dir, ec)) {
        throw InputError(fmt::format("fixture output directory '{}' is not empty", out_dir.string()));
    }
    Rng rng(spec.seed);

    // Class sizes first, then a slot budget large enough for members, one
    // decoy per class and the noise pool.
    std::vector<std::size_t> sizes(spec.n_classes);
    for (auto& size : sizes) size = rng.between(spec.class_size_min, spec.class_size_max);
    std::size_t members = 0;
    for (auto size : sizes) members += size;
    const std::size_t free_budget = std::max<std::size_t>(spec.noise_edits + 2, 4);
    const std::size_t total = members + spec.n_classes + free_budget;
    const std::size_t slots_per_file = (total + spec.n_files - 1) / spec.n_files;

    std::vector<Slot> pool;
    for (std::size_t f = 0; f < spec.n_files; ++f) {
        for (std::size_t s = 0; s < slots_per_file; ++s) pool.push_back({f, s});
    }
    rng.shuffle(pool);

    std::size_t next = 0;
    std::vector<std::vector<Slot>> classes(spec.n_classes);
    for (std::size_t c = 0; c < spec.n_classes; ++c) {
        for (std::size_t m = 0; m < sizes[c]; ++m) classes[c].push_back(pool[next++]);
    }
    std::vector<Slot> decoys;
    for (std::size_t c = 0; c < spec.n_classes; ++c) decoys.push_back(pool[next++]);
    std::vector<Slot> free_slots(pool.begin() + static_cast<std::ptrdiff_t>(next), pool.end());
    std::sort(free_slots.begin(), free_slots.end());

    std::map<Slot, std::pair<std::size_t, std::size_t>> membership;  // slot -> (class, member index)
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t m = 0; m < classes[c].size(); ++m) membership[classes[c][m]] = {c, m};
    }

    // Edit plan per revision pair.
    const std::size_t n_pairs = spec.n_revisions - 1;
    std::vector<std::map<Slot, Edit>> edits(n_pairs);
    auto draw_edit = [&] {
        Edit e;
        e.first = static_cast<LineNo>(rng.between(2, 9));
        e.last = static_cast<LineNo>(rng.between(static_cast<std::uint64_t>(e.first), 9));
        return e;
    };
    std::vector<std::pair<std::size_t, std::size_t>> events;  // (pair, class)
    for (std::size_t p = 0; p < n_pairs; ++p) {
        for (std::size_t c = 0; c < spec.n_classes; ++c) events.emplace_back(p, c);
    }
    rng.shuffle(events);
    events.resize(std::min(events.size(), spec.cochange_edits));
    std::sort(events.begin(), events.end());
    for (const auto& [p, c] : events) {
        for (const auto& slot : classes[c]) edits[p][slot] = draw_edit();
    }
    std::vector<std::pair<std::size_t, std::size_t>> noise;  // (pair, free slot index)
    for (std::size_t p = 0; p < n_pairs; ++p) {
        for (std::size_t s = 0; s < free_slots.size(); ++s) noise.emplace_back(p, s);
    }
    rng.shuffle(noise);
    noise.resize(std::min(noise.size(), spec.noise_edits));
    std::sort(noise.begin(), noise.end());
    for (const auto& [p, s] : noise) edits[p][free_slots[s]] = draw_edit();

    // Revision trees.
    const auto lines_per_file = static_cast<LineNo>(slots_per_file) * kSlotLines;
    std::vector<std::vector<std::string>> files(spec.n_files);
    for (std::size_t f = 0; f < spec.n_files; ++f) {
        for (LineNo line = 1; line <= lines_per_file; ++line) files[f].push_back(line_text(f, line, "0"));
    }
    FixtureManifest manifest;
    manifest.spec = spec;
    const auto system_root = out_dir / "revisions" / spec.system_id;
    for (std::size_t r = 0; r < spec.n_revisions; ++r) {
        if (r > 0) {
            for (const auto& [slot, edit] : edits[r - 1]) {
                for (LineNo k = edit.first; k <= edit.last; ++k) {
                    const LineNo line = slot_start(slot) + k - 1;
                    const std::string value = fmt::format("{}{:x}", r, rng.raw() & 0xffffffU);
                    files[slot.file][static_cast<std::size_t>(line - 1)] = line_text(slot.file, line, value);
                }
            }
        }
        const auto dir = system_root / revision_dir(r);
        for (std::size_t f = 0; f < spec.n_files; ++f) write_text_file(dir / file_name(f), render(files[f]));
        write_text_file(dir / "README.txt", fmt::format("revision {}\n", revision_id(r)));
        manifest.revisions.push_back(revision_id(r));
    }

    // Tool reports; coordinates never move, so every revision gets the same classes.
    const auto& tools = fixture_tools();
    for (const auto& tool : tools) {
        for (std::size_t r = 0; r < spec.n_revisions; ++r) {
            CloneReport report;
            report.tool_id = tool;
            report.system_id = spec.system_id;
            report.revision_id = revision_id(r);
            for (std::size_t c = 0; c < classes.size(); ++c) {
                std::vector<Slot> slots = classes[c];
                if (tool == "partial") slots.pop_back();
                if (tool == "noisy") slots.push_back(decoys[c]);
                if (slots.size() < 2) continue;
                CloneClass cls;
                cls.class_id = fmt::format("c{}", c + 1);
                for (std::size_t m = 0; m < slots.size(); ++m) cls.fragments.push_back({slot_anchor(slots[m]), m + 1});
                report.classes.push_back(std::move(cls));
            }
            write_text_file(out_dir / "reports" / tool / spec.system_id / (report.revision_id + ".json"),
                            to_interchange_json(report));
        }
    }

    // Expected counts per target, in (pair, path, line) order and tool order.
    std::vector<double> recall_sum(tools.size(), 0.0);
    std::vector<double> precision_sum(tools.size(), 0.0);
    std::vector<std::size_t> n_targets(tools.size(), 0);
    for (std::size_t p = 0; p < n_pairs; ++p) {
        std::vector<std::tuple<std::string, LineNo, Slot>> order;
        for (const auto& [slot, edit] : edits[p]) order.emplace_back(file_name(slot.file), slot_start(slot) + edit.first - 1, slot);
        std::sort(order.begin(), order.end());
        std::map<std::string, std::size_t> per_file;
        for (const auto& [path, start, slot] : order) {
            const std::size_t k_in_file = ++per_file[path];
            auto member = membership.find(slot);
            if (member == membership.end()) continue;  // noise: no tool predicts anything
            const auto [c, m] = member->second;
            const std::size_t k = classes[c].size();
            const std::string label = fmt::format("{}:{}..{}:{}#{}", spec.system_id, revision_id(p), revision_id(p + 1),
                                                  path, k_in_file);
            ++manifest.atc;
            manifest.ccc += k - 1;
            for (std::size_t t = 0; t < tools.size(); ++t) {
                ExpectedTarget e;
                e.tool_id = tools[t];
                e.target_id = label;
                e.ccc_size = k - 1;
                if (tools[t] == "oracle") {
                    e.pcc_size = k - 1;
                    e.tp = k - 1;
                } else if (tools[t] == "partial") {
                    const bool kept = k >= 3 && m + 1 < k;
                    e.pcc_size = kept ? k - 2 : 0;
                    e.tp = e.pcc_size;
                } else {
                    e.pcc_size = k;
                    e.tp = k - 1;
                    e.fp = 1;
                }
                e.fn = e.ccc_size - e.tp;
                recall_sum[t] += static_cast<double>(e.tp) / static_cast<double>(e.ccc_size);
                precision_sum[t] += e.pcc_size == 0 ? 0.0
                                                    : static_cast<double>(e.pcc_size - e.fp) /
                                                          static_cast<double>(e.pcc_size);
                ++n_targets[t];
                manifest.targets.push_back(std::move(e));
            }
        }
    }
    for (std::size_t t = 0; t < tools.size(); ++t) {
        ExpectedToolMetrics metrics;
        metrics.tool_id = tools[t];
        metrics.n_targets = n_targets[t];
        if (n_targets[t] > 0) {
            const auto n = static_cast<double>(n_targets[t]);
            metrics.avg_recall = recall_sum[t] / n;
            metrics.avg_precision = precision_sum[t] / n;
            const double sum = metrics.avg_recall + metrics.avg_precision;
            metrics.f1 = sum <= 0.0 ? 0.0 : 2.0 * metrics.avg_recall * metrics.avg_precision / sum;
        }
        manifest.tools.push_back(metrics);
    }

    std::string config = "output_dir = \"out\"\nfile_extensions = [\".c\", \".h\", \".java\"]\n\n";
    config += fmt::format("[[systems]]\nid = \"{}\"\nrevisions_root = \"revisions\"\n", spec.system_id);
    for (const auto& tool : tools) {
        config += fmt::format(
            "\n[[tools]]\nid = \"{0}\"\nformat = \"interchange\"\nreports_root = \"reports/{0}\"\n"
            "clone_type = \"T3\"\nprocessing = \"text\"\n",
            tool);
    }
    write_text_file(out_dir / "bench.toml", config);
    write_text_file(out_dir / "expected_metrics.json", manifest.to_json().dump(2) + "\n");
    return manifest;
}

}  // namespace ccbench
