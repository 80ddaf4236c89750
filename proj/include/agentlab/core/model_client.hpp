#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "agentlab/errors.hpp"
#include "agentlab/util.hpp"

namespace agentlab {

// Sampling knobs for a single completion call.
struct GenParams {
    double temperature = 0.0;
    int max_tokens = 1024;
    std::optional<int64_t> seed;

    void validate() const {
        if (temperature < 0.0)
            throw Error(ErrorCode::Precondition, "temperature must be >= 0");
        if (max_tokens < 1)
            throw Error(ErrorCode::Precondition, "max_tokens must be >= 1");
    }
};

struct Message {
    std::string role;  // "system" | "user" | "assistant"
    std::string content;
};

inline std::string render_messages(const std::vector<Message>& messages) {
    std::string out;
    for (const auto& m : messages) {
        out += m.role;
        out += ": ";
        out += m.content;
        out += '\n';
    }
    return out;
}

// A text-completion policy. Implementations must be safe for concurrent
// calls from distinct agent runs.
class ModelClient {
public:
    virtual ~ModelClient() = default;
    virtual std::string complete(const std::vector<Message>& messages, const GenParams& params) = 0;
    virtual std::string identifier() const = 0;
};

// One pattern-matching rule of the bundled deterministic mock.
// Matches when `contains` occurs in any message (empty matches everything)
// and, if `seed` is set, when params.seed equals it.
struct MockRule {
    std::string contains;
    std::optional<int64_t> seed;
    std::string respond;
};

// Deterministic mock client: the response is a pure function of
// (messages, params, seed). First matching rule wins; without a match the
// configured default (or a hash-derived string) is returned.
class DeterministicMockClient : public ModelClient {
public:
    explicit DeterministicMockClient(std::string identifier = "mock",
                                     std::vector<MockRule> rules = {},
                                     std::string default_response = "")
        : identifier_(std::move(identifier)),
          rules_(std::move(rules)),
          default_response_(std::move(default_response)) {}

    std::string complete(const std::vector<Message>& messages, const GenParams& params) override {
        params.validate();
        const std::string rendered = render_messages(messages);
        for (const auto& rule : rules_) {
            if (rule.seed && (!params.seed || *params.seed != *rule.seed)) continue;
            if (!rule.contains.empty() && rendered.find(rule.contains) == std::string::npos) continue;
            return rule.respond;
        }
        if (!default_response_.empty()) return default_response_;
        uint64_t h = fnv1a64(rendered);
        if (params.seed) h = fnv1a64(std::to_string(*params.seed), h);
        return "mock-" + to_hex16(h);
    }

    std::string identifier() const override { return identifier_; }

    static DeterministicMockClient from_json(const nlohmann::json& spec) {
        std::vector<MockRule> rules;
        if (spec.contains("rules")) {
            for (const auto& r : spec.at("rules")) {
                MockRule rule;
                rule.contains = r.value("contains", "");
                if (r.contains("seed")) rule.seed = r.at("seed").get<int64_t>();
                rule.respond = r.at("respond").get<std::string>();
                rules.push_back(std::move(rule));
            }
        }
        return DeterministicMockClient(spec.value("identifier", "mock"), std::move(rules),
                                       spec.value("default", ""));
    }

private:
    std::string identifier_;
    std::vector<MockRule> rules_;
    std::string default_response_;
};

// Always returns the same text. Handy for degenerate fixtures.
class FixedClient : public ModelClient {
public:
    FixedClient(std::string identifier, std::string response)
        : identifier_(std::move(identifier)), response_(std::move(response)) {}

    std::string complete(const std::vector<Message>&, const GenParams& params) override {
        params.validate();
        return response_;
    }

    std::string identifier() const override { return identifier_; }

private:
    std::string identifier_;
    std::string response_;
};

}  // namespace agentlab
