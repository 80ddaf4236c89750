#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "agentlab/errors.hpp"

namespace agentlab {

// A plain-text template with {name} placeholders. A literal brace is not
// part of the placeholder grammar unless it opens a well-formed {name}
// marker (letters, digits, underscore), so JSON braces in template bodies
// pass through untouched.
struct PromptTemplate {
    std::string name;
    std::string body;
    std::set<std::string> required_placeholders;

    static bool is_placeholder_char(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_';
    }

    // Scans body for {name} markers.
    static std::set<std::string> scan_placeholders(const std::string& body) {
        std::set<std::string> found;
        for (size_t i = 0; i < body.size(); ++i) {
            if (body[i] != '{') continue;
            size_t j = i + 1;
            while (j < body.size() && is_placeholder_char(body[j])) ++j;
            if (j > i + 1 && j < body.size() && body[j] == '}') {
                found.insert(body.substr(i + 1, j - i - 1));
                i = j;
            }
        }
        return found;
    }

    static PromptTemplate from_body(std::string name, std::string body) {
        PromptTemplate t;
        t.name = std::move(name);
        t.required_placeholders = scan_placeholders(body);
        t.body = std::move(body);
        return t;
    }
};

// Replaces every placeholder with its binding; all other bytes of the body
// are preserved verbatim.
inline std::string render_prompt(const PromptTemplate& tpl,
                                 const std::map<std::string, std::string>& bindings) {
    for (const auto& name : tpl.required_placeholders) {
        if (!bindings.count(name))
            throw Error(ErrorCode::MissingPlaceholder, name + " (template " + tpl.name + ")");
    }
    std::string out;
    out.reserve(tpl.body.size());
    const std::string& body = tpl.body;
    for (size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '{') {
            size_t j = i + 1;
            while (j < body.size() && PromptTemplate::is_placeholder_char(body[j])) ++j;
            if (j > i + 1 && j < body.size() && body[j] == '}') {
                auto it = bindings.find(body.substr(i + 1, j - i - 1));
                if (it != bindings.end()) {
                    out += it->second;
                    i = j;
                    continue;
                }
            }
        }
        out.push_back(body[i]);
    }
    return out;
}

// Named template store. Starts from compiled-in defaults; templates can be
// overridden from a directory of <name>.txt files.
class PromptRegistry {
public:
    void add(PromptTemplate tpl) { templates_[tpl.name] = std::move(tpl); }

    const PromptTemplate& get(const std::string& name) const {
        auto it = templates_.find(name);
        if (it == templates_.end())
            throw Error(ErrorCode::Precondition, "unknown prompt template: " + name);
        return it->second;
    }

    bool has(const std::string& name) const { return templates_.count(name) != 0; }

    void load_directory(const std::filesystem::path& dir) {
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
            std::ifstream in(entry.path(), std::ios::binary);
            if (!in) throw Error(ErrorCode::IoError, "cannot read " + entry.path().string());
            std::ostringstream buf;
            buf << in.rdbuf();
            add(PromptTemplate::from_body(entry.path().stem().string(), buf.str()));
        }
    }

private:
    std::map<std::string, PromptTemplate> templates_;
};

}  // namespace agentlab
