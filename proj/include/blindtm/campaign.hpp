#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace blindtm {

/// Seeded engine-versus-oracle comparison over random instances.
struct CampaignOptions {
    /// sigma-rho | p-rho | kernel | r-regular | code | reduction
    std::string problem;
    int max_n = 6;
    int max_k = 3;
    int trials = 100;
    std::uint64_t seed = 1;
    /// Also decide every instance through the compiled circuit.
    bool circuit = false;
};

struct CampaignReport {
    std::string problem;
    int agree = 0;
    int total = 0;
    /// One line per disagreeing trial, describing the instance.
    std::vector<std::string> disagreements;
};

/// Throws std::invalid_argument for an unknown problem name.
CampaignReport run_campaign(const CampaignOptions& options);

/// "<problem>: <agree>/<total> agree" followed by the disagreement lines.
std::string format_report(const CampaignReport& report);

} // namespace blindtm
