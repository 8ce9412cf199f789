#include "ccbench/clone_ingest.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <charconv>
#include <set>
#include <sstream>

#include "ccbench/csv.hpp"
#include "ccbench/error.hpp"

namespace ccbench {

namespace {

constexpr std::size_t kMaxNesting = 256;

struct RawFragment {
    std::string file;
    LineNo start_line = 0;
    LineNo end_line = 0;
    std::string location;
};

struct RawClass {
    std::string id;
    std::vector<RawFragment> fragments;
    std::string location;
};

std::string reroot(const std::string& raw, const std::string& prefix, const std::string& location) {
    std::string path = raw;
    for (char& c : path) {
        if (c == '\\') c = '/';
    }
    std::string pre = prefix;
    for (char& c : pre) {
        if (c == '\\') c = '/';
    }
    while (pre.size() > 1 && pre.back() == '/') pre.pop_back();

    const bool absolute = !path.empty() && path.front() == '/';
    if (!pre.empty() && path.starts_with(pre) && (path.size() == pre.size() || path[pre.size()] == '/')) {
        path = path.substr(pre.size());
        while (!path.empty() && path.front() == '/') path.erase(path.begin());
    } else if (absolute) {
        throw ParseError(location, pre.empty()
                                       ? fmt::format("absolute path '{}' needs a configured path prefix", raw)
                                       : fmt::format("absolute path '{}' is outside prefix '{}'", raw, prefix));
    }
    try {
        return normalize_path(path);
    } catch (const InputError& e) {
        throw ParseError(location, e.what());
    }
}

ParsedReport assemble(CloneReport header, std::vector<RawClass> raw_classes, const std::string& prefix) {
    ParsedReport parsed;
    parsed.report = std::move(header);
    for (auto& raw : raw_classes) {
        CloneClass clone_class;
        clone_class.class_id = raw.id;
        std::set<FileAnchor> seen;
        for (auto& fragment : raw.fragments) {
            if (fragment.start_line < 1 || fragment.end_line < 1) {
                throw ParseError(fragment.location, "line numbers must be >= 1");
            }
            if (fragment.end_line < fragment.start_line) {
                throw ParseError(fragment.location, fmt::format("end_line {} precedes start_line {}",
                                                                fragment.end_line, fragment.start_line));
            }
            FileAnchor anchor{reroot(fragment.file, prefix, fragment.location),
                              {fragment.start_line, fragment.end_line}};
            if (!seen.insert(anchor).second) {
                parsed.warnings.push_back({Severity::warning, fragment.location,
                                           fmt::format("duplicate fragment {}:{}-{} removed", anchor.file_path,
                                                       anchor.range.start_line, anchor.range.end_line)});
                continue;
            }
            clone_class.fragments.push_back({std::move(anchor), clone_class.fragments.size()});
        }
        if (clone_class.fragments.size() < 2) {
            parsed.warnings.push_back({Severity::warning, raw.location,
                                       fmt::format("class '{}' has {} distinct fragment(s); dropped", raw.id,
                                                   clone_class.fragments.size())});
            continue;
        }
        parsed.report.classes.push_back(std::move(clone_class));
    }
    return parsed;
}

// Nesting depth of brackets outside JSON strings; the JSON library's value
// destructor recurses, so pathological documents are refused up front.
bool json_too_deep(std::string_view text) {
    std::size_t depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (char c : text) {
        if (in_string) {
            if (escaped) {
                escaped = false;
            } else if (c == '\\') {
                escaped = true;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == '[' || c == '{') {
            if (++depth > kMaxNesting) return true;
        } else if ((c == ']' || c == '}') && depth > 0) {
            --depth;
        }
    }
    return false;
}

bool xml_too_deep(std::string_view text) {
    std::size_t depth = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != '<') continue;
        const char next = text[i + 1];
        if (next == '/') {
            if (depth > 0) --depth;
        } else if (next != '?' && next != '!') {
            const auto close = text.find('>', i);
            if (close == std::string_view::npos) return false;
            if (close > 0 && text[close - 1] == '/') continue;
            if (++depth > kMaxNesting) return true;
        }
    }
    return false;
}

using Json = nlohmann::json;

const Json& member(const Json& object, const char* key, const std::string& path) {
    auto it = object.find(key);
    if (it == object.end()) throw ParseError(path, fmt::format("missing required field '{}'", key));
    return *it;
}

std::string string_member(const Json& object, const char* key, const std::string& path) {
    const Json& value = member(object, key, path);
    if (!value.is_string()) throw ParseError(path + "." + key, "expected a string");
    return value.get<std::string>();
}

LineNo line_member(const Json& object, const char* key, const std::string& path) {
    const Json& value = member(object, key, path);
    const std::string where = path + "." + key;
    if (value.is_number_unsigned()) {
        const auto v = value.get<std::uint64_t>();
        if (v > static_cast<std::uint64_t>(std::numeric_limits<LineNo>::max())) {
            throw ParseError(where, "line number out of range");
        }
        return static_cast<LineNo>(v);
    }
    if (value.is_number_integer()) return value.get<LineNo>();
    throw ParseError(where, "expected an integer line number");
}

}  // namespace

std::string_view to_string(ReportFormat format) noexcept {
    switch (format) {
        case ReportFormat::interchange: return "interchange";
        case ReportFormat::xml: return "xml";
        case ReportFormat::csv: return "csv";
    }
    return "interchange";
}

ReportFormat report_format_from_string(std::string_view text) {
    if (text == "interchange" || text == "json") return ReportFormat::interchange;
    if (text == "xml") return ReportFormat::xml;
    if (text == "csv") return ReportFormat::csv;
    throw InputError(fmt::format("unknown report format '{}' (expected interchange, xml or csv)", text));
}

std::string_view file_extension(ReportFormat format) noexcept {
    switch (format) {
        case ReportFormat::interchange: return ".json";
        case ReportFormat::xml: return ".xml";
        case ReportFormat::csv: return ".csv";
    }
    return ".json";
}

ParsedReport parse_interchange(std::string_view document, const IngestOptions& options) {
    if (json_too_deep(document)) throw ParseError("$", "document nesting too deep");
    Json root;
    try {
        root = Json::parse(document.begin(), document.end());
    } catch (const Json::parse_error& e) {
        throw ParseError("$", fmt::format("invalid JSON: {}", e.what()));
    }
    if (!root.is_object()) throw ParseError("$", "expected an object");

    CloneReport header;
    header.tool_id = string_member(root, "tool", "$");
    header.system_id = string_member(root, "system", "$");
    header.revision_id = string_member(root, "revision", "$");
    try {
        header.tool_meta.clone_type = clone_type_from_string(string_member(root, "clone_type", "$"));
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError("$.clone_type", e.what());
    }
    try {
        header.tool_meta.processing = processing_from_string(string_member(root, "processing", "$"));
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError("$.processing", e.what());
    }

    const Json& classes = member(root, "classes", "$");
    if (!classes.is_array()) throw ParseError("$.classes", "expected an array");

    std::vector<RawClass> raw_classes;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const std::string cpath = fmt::format("$.classes[{}]", ci);
        const Json& cls = classes[ci];
        if (!cls.is_object()) throw ParseError(cpath, "expected an object");
        RawClass raw;
        raw.id = string_member(cls, "id", cpath);
        raw.location = cpath;
        const Json& fragments = member(cls, "fragments", cpath);
        if (!fragments.is_array()) throw ParseError(cpath + ".fragments", "expected an array");
        for (std::size_t fi = 0; fi < fragments.size(); ++fi) {
            const std::string fpath = fmt::format("{}.fragments[{}]", cpath, fi);
            const Json& frag = fragments[fi];
            if (!frag.is_object()) throw ParseError(fpath, "expected an object");
            raw.fragments.push_back({string_member(frag, "file", fpath), line_member(frag, "start_line", fpath),
                                     line_member(frag, "end_line", fpath), fpath});
        }
        raw_classes.push_back(std::move(raw));
    }
    return assemble(std::move(header), std::move(raw_classes), options.path_prefix);
}

namespace {

namespace pt = boost::property_tree;

LineNo xml_line(const pt::ptree& attrs, const char* name, const std::string& where) {
    auto value = attrs.get_optional<std::string>(name);
    if (!value) throw ParseError(where, fmt::format("missing attribute '{}'", name));
    LineNo parsed = 0;
    const std::string& text = *value;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError(where, fmt::format("attribute '{}' is not an integer: '{}'", name, text));
    }
    return parsed;
}

CloneReport header_from(const IngestOptions& options) {
    CloneReport header;
    header.tool_id = options.tool_id;
    header.system_id = options.system_id;
    header.revision_id = options.revision_id;
    header.tool_meta = options.tool_meta;
    return header;
}

}  // namespace

ParsedReport parse_class_xml(std::string_view document, const IngestOptions& options) {
    if (xml_too_deep(document)) throw ParseError("/", "document nesting too deep");
    pt::ptree tree;
    try {
        std::istringstream in{std::string(document)};
        pt::read_xml(in, tree, pt::xml_parser::no_comments);
    } catch (const pt::xml_parser_error& e) {
        throw ParseError(fmt::format("line {}", e.line()), fmt::format("malformed XML: {}", e.message()));
    } catch (const pt::ptree_error& e) {
        throw ParseError("/", fmt::format("malformed XML: {}", e.what()));
    }

    const pt::ptree* root = nullptr;
    std::string root_name;
    std::string class_name;
    for (const auto& [name, child] : tree) {
        if (name == "classes" || name == "clones") {
            root = &child;
            root_name = name;
            class_name = name == "classes" ? "class" : "clone";
            break;
        }
    }
    if (root == nullptr) throw ParseError("/", "expected a <classes> or <clones> root element");

    std::vector<RawClass> raw_classes;
    std::size_t ordinal = 0;
    for (const auto& [name, node] : *root) {
        if (name != class_name) continue;
        ++ordinal;
        RawClass raw;
        raw.location = fmt::format("{}/{}[{}]", root_name, class_name, ordinal);
        const auto attrs = node.get_child_optional("<xmlattr>");
        boost::optional<std::string> id;
        if (attrs) {
            id = attrs->get_optional<std::string>("classid");
            if (!id) id = attrs->get_optional<std::string>("id");
        }
        raw.id = id ? *id : std::to_string(ordinal);

        std::size_t source_ordinal = 0;
        for (const auto& [child_name, source] : node) {
            if (child_name != "source") continue;
            ++source_ordinal;
            const std::string where = fmt::format("{}/source[{}]", raw.location, source_ordinal);
            const auto source_attrs = source.get_child_optional("<xmlattr>");
            if (!source_attrs) throw ParseError(where, "missing attributes 'file', 'startline', 'endline'");
            auto file = source_attrs->get_optional<std::string>("file");
            if (!file) throw ParseError(where, "missing attribute 'file'");
            raw.fragments.push_back(
                {*file, xml_line(*source_attrs, "startline", where), xml_line(*source_attrs, "endline", where), where});
        }
        raw_classes.push_back(std::move(raw));
    }
    return assemble(header_from(options), std::move(raw_classes), options.path_prefix);
}

ParsedReport parse_generic_csv(std::string_view document, const IngestOptions& options) {
    const auto rows = parse_csv(document);
    if (rows.empty()) throw ParseError("row 1", "missing header 'class_id,file,start_line,end_line'");
    const std::vector<std::string> expected{"class_id", "file", "start_line", "end_line"};
    if (rows.front().fields != expected) {
        throw ParseError(fmt::format("row {}", rows.front().line), "header must be 'class_id,file,start_line,end_line'");
    }

    std::vector<RawClass> raw_classes;
    std::map<std::string, std::size_t, std::less<>> index;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const std::string where = fmt::format("row {}", row.line);
        if (row.fields.size() != 4) {
            throw ParseError(where, fmt::format("expected 4 fields, found {}", row.fields.size()));
        }
        auto parse_line = [&](const std::string& text, const char* column) {
            LineNo value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
                throw ParseError(where, fmt::format("{} is not an integer: '{}'", column, text));
            }
            return value;
        };
        const LineNo start = parse_line(row.fields[2], "start_line");
        const LineNo end = parse_line(row.fields[3], "end_line");

        auto [it, inserted] = index.try_emplace(row.fields[0], raw_classes.size());
        if (inserted) raw_classes.push_back({row.fields[0], {}, fmt::format("class '{}'", row.fields[0])});
        raw_classes[it->second].fragments.push_back({row.fields[1], start, end, where});
    }
    return assemble(header_from(options), std::move(raw_classes), options.path_prefix);
}

ParsedReport parse_report(ReportFormat format, std::string_view document, const IngestOptions& options) {
    switch (format) {
        case ReportFormat::interchange: return parse_interchange(document, options);
        case ReportFormat::xml: return parse_class_xml(document, options);
        case ReportFormat::csv: return parse_generic_csv(document, options);
    }
    throw InvariantError("unhandled report format");
}

std::string to_interchange_json(const CloneReport& report) {
    nlohmann::ordered_json root;
    root["tool"] = report.tool_id;
    root["system"] = report.system_id;
    root["revision"] = report.revision_id;
    root["clone_type"] = std::string(to_string(report.tool_meta.clone_type));
    root["processing"] = std::string(to_string(report.tool_meta.processing));
    root["classes"] = nlohmann::ordered_json::array();
    for (const auto& clone_class : report.classes) {
        nlohmann::ordered_json cls;
        cls["id"] = clone_class.class_id;
        cls["fragments"] = nlohmann::ordered_json::array();
        for (const auto& fragment : clone_class.fragments) {
            nlohmann::ordered_json frag;
            frag["file"] = fragment.anchor.file_path;
            frag["start_line"] = fragment.anchor.range.start_line;
            frag["end_line"] = fragment.anchor.range.end_line;
            cls["fragments"].push_back(std::move(frag));
        }
        root["classes"].push_back(std::move(cls));
    }
    return root.dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) + "\n";
}

}  // namespace ccbench
