#pragma once

// JSON sidecar: every resolved simulation parameter plus the code seed,
// written next to the CSV so any run can be reproduced exactly.

#include <fstream>

#include <json.hpp>

#include "pnc/harness.hpp"

namespace pnc {

inline nlohmann::json config_to_json(const SimulationConfig& cfg) {
    nlohmann::json j;
    j["scheme"] = scheme_name(cfg.scheme);
    j["modulation"] = {
        {"kind", cfg.modulation.kind == ModulationConfig::Kind::psk ? "psk" : "pam"},
        {"M", cfg.modulation.M},
        {"rotation_a", cfg.modulation.rotation_a},
        {"rotation_b", cfg.modulation.rotation_b},
        {"spacings_a", cfg.modulation.spacings_a},
        {"spacings_b", cfg.modulation.spacings_b},
    };
    j["code"] = {
        {"n", cfg.code.n},           {"k", cfg.code.k},
        {"dv", cfg.code.dv},         {"dc", cfg.code.dc},
        {"seed", cfg.code.seed},     {"alphabet", resolve_alphabet(cfg).describe()},
    };
    j["channel"] = {
        {"kind", cfg.channel.kind == ChannelModel::Kind::awgn ? "awgn" : "block-rayleigh"},
        {"blocks", cfg.channel.blocks},
    };
    j["snr_grid_db"] = cfg.snr_grid_db;
    j["stopping"] = {{"min_frame_errors", cfg.stopping.min_frame_errors},
                     {"max_frames", cfg.stopping.max_frames}};
    const char* cu = cfg.relay.decoder.check_update == CheckUpdate::direct ? "direct"
                     : cfg.relay.decoder.check_update == CheckUpdate::fft ? "fft"
                                                                          : "ems";
    j["decoder"] = {
        {"max_iter", cfg.relay.decoder.max_iter},
        {"check_update", cu},
        {"ems_list_size", cfg.relay.decoder.ems_list_size},
        {"ems_offset", cfg.relay.decoder.ems_offset},
        {"damping", cfg.relay.decoder.damping},
        {"early_stop", cfg.relay.decoder.early_stop},
    };
    j["relay"] = {
        {"outer_iters", cfg.relay.outer_iters},
        {"inner_iters", cfg.relay.inner_iters},
        {"mud_iterative", cfg.relay.mud_iterative},
        {"mud_exchange_rounds", cfg.relay.mud_exchange_rounds},
        {"coeff_strategy",
         cfg.relay.coeff_strategy == CoeffStrategy::selected ? "selected" : "all-pairs"},
        {"merge_tolerance", cfg.relay.merge_tolerance},
    };
    j["master_seed"] = cfg.master_seed;
    j["threads"] = cfg.threads;
    j["force_noiseless"] = cfg.force_noiseless;
    j["config_hash"] = config_hash(cfg);
    return j;
}

inline void write_config_sidecar(const SimulationConfig& cfg, const std::string& csv_path) {
    const std::string path = csv_path + ".config.json";
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << config_to_json(cfg).dump(2) << '\n';
}

} // namespace pnc
