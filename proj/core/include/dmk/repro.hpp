// Canned reproductions of the worked examples, the property suites backing
// them, and the report plumbing shared by the command-line tool and the
// acceptance tests.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace dmk {

struct SessionConfig {
    uint32_t p = 101;
    int prec = -1;  // truncation level; -1 picks the certified automatic level
    uint64_t seed = 0;
    int samples = 500;
    int deg_bound = 6;
    long long budget = 1LL << 20;
};

enum class Verdict { PASS, FAIL, EVIDENCE_ONLY };

std::string verdict_name(Verdict v);

struct ReproCheck {
    std::string name;
    bool ok;
};

struct ReproReport {
    std::string command;
    SessionConfig config;
    int used_N = 0;  // 0 when no semigroup ring is involved
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    std::vector<ReproCheck> checks;
    bool sampled = false;  // evidence for a universally quantified claim
    long long millis = 0;

    Verdict verdict() const;
};

struct ReproOptions {
    int e = 4;                      // example5.4 family parameter, in [3, 8]
    std::string variant = "gprime";  // example5.4: "gprime" | "g"
    int part = 1;                   // remark5.5: 1 | 3
};

// Known commands: example5.1, remark5.2, footnote5.3, example5.4, remark5.5,
// props-setup5.3, props-content, thm31-demo, thm33-demo, stability.
// Throws std::invalid_argument for unknown commands or bad options.
ReproReport run_repro(const std::string& command, const SessionConfig& cfg,
                      const ReproOptions& opt = {});

std::vector<std::string> repro_commands();

nlohmann::ordered_json report_json(const ReproReport& r);
std::string report_text(const ReproReport& r);
int report_exit_code(const ReproReport& r);

}  // namespace dmk
