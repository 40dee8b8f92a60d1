#pragma once

#include "expression.hpp"
#include "groebner.hpp"
#include "version.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <thread>

namespace qorb {

/// Reduced Gröbner bases on disk, one text file per ideal: one polynomial per line in
/// canonical form. Entries are keyed by engine version, order, degree cap and a hash of
/// the generators (which determine genus and mode).
class DiskBasisStore : public BasisStore {
public:
    explicit DiskBasisStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// $QORB_CACHE_DIR, else $XDG_CACHE_HOME/qorb, else ~/.cache/qorb.
    static std::filesystem::path default_dir() {
        if (const char* d = std::getenv("QORB_CACHE_DIR"); d && *d) return d;
        if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "qorb";
        if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "qorb";
        return std::filesystem::temp_directory_path() / "qorb-cache";
    }

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<std::vector<Polynomial>> load(const std::string& key) override {
        std::ifstream in(path(key));
        if (!in) return std::nullopt;
        std::vector<Polynomial> basis;
        std::string line;
        try {
            while (std::getline(in, line))
                if (!line.empty()) basis.push_back(parse_polynomial(line));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        return basis;
    }

    void store(const std::string& key, const std::vector<Polynomial>& basis) override {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) return;
        const auto target = path(key);
        const auto tmp = target.string() + "." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) return;
            for (const auto& p : basis) out << to_string(p) << '\n';
        }
        std::filesystem::rename(tmp, target, ec);
    }

private:
    std::filesystem::path path(const std::string& key) const {
        return dir_ / (std::string("v") + kEngineVersion + "-" + key + ".gb");
    }

    std::filesystem::path dir_;
};

}  // namespace qorb
