#include "denstat/statistics.hpp"

#include <algorithm>
#include <charconv>

namespace denstat {

namespace {

void require_positive(int value, const char* name) {
    if (value < 1) {
        throw range_error(std::string(name) + " must be >= 1, got " +
                          std::to_string(value));
    }
}

bool is_exclp(const Permutation& s, int i, int gap, int level_letter) {
    return s.at(i) >= i + gap && s.at(i) >= level_letter;
}

}  // namespace

GapLevelProfile gap_level_profile(const Permutation& sigma, int gap, int level_exc,
                                  int level_letter) {
    require_positive(gap, "gap");
    require_positive(level_exc, "level");
    require_positive(level_letter, "level");
    GapLevelProfile out;
    const int n = sigma.size();
    for (int i = 1; i <= n; ++i) {
        const int v = sigma.at(i);
        const bool gap_exc = v >= i + gap;
        if (gap_exc && v >= level_letter) {
            out.exclp_positions.push_back(i);
            out.excl_letters.push_back(v);
        } else {
            out.nexcl_letters.push_back(v);
        }
        if (gap_exc && i >= level_exc) out.exc_positions.push_back(i);
    }
    return out;
}

int gap_level_den(const Permutation& sigma, int gap, int level_letter) {
    require_positive(gap, "gap");
    require_positive(level_letter, "level");
    const int n = sigma.size();
    int total = 0;
    for (int i = 1; i <= n; ++i) {
        if (is_exclp(sigma, i, gap, level_letter)) total += i + gap - 1;
    }
    // Inversions within each of the two complementary subsequences.
    for (int i = 1; i <= n; ++i) {
        const bool ci = is_exclp(sigma, i, gap, level_letter);
        for (int j = i + 1; j <= n; ++j) {
            if (ci == is_exclp(sigma, j, gap, level_letter) && sigma.at(i) > sigma.at(j))
                ++total;
        }
    }
    return total;
}

int gap_level_exc_count(const Permutation& sigma, int gap, int level) {
    require_positive(gap, "gap");
    require_positive(level, "level");
    int count = 0;
    for (int i = std::max(level, 1); i <= sigma.size(); ++i) {
        if (sigma.at(i) >= i + gap) ++count;
    }
    return count;
}

std::pair<std::vector<int>, std::vector<int>> level_split(const Permutation& sigma,
                                                          int gap, int level_letter,
                                                          int level) {
    require_positive(level, "level");
    std::vector<int> a, b;
    const int n = sigma.size();
    for (int i = 1; i <= level - 1; ++i) {
        if (i <= n && is_exclp(sigma, i, gap, level_letter)) {
            a.push_back(i);
        } else {
            b.push_back(i);
        }
    }
    return {std::move(a), std::move(b)};
}

DescentProfile descent_profile(const Permutation& sigma, int r) {
    require_positive(r, "r");
    DescentProfile out;
    const int n = sigma.size();
    for (int i = 1; i < n; ++i) {
        if (sigma.at(i) >= sigma.at(i + 1) + r) out.rdes_positions.push_back(i);
    }
    out.rdes = static_cast<int>(out.rdes_positions.size());
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (sigma.at(i) > sigma.at(j) && sigma.at(i) < sigma.at(j) + r) ++out.rinv;
        }
    }
    out.rmaj = out.rinv;
    for (int pos : out.rdes_positions) out.rmaj += pos;
    return out;
}

int eval_stat(const StatDescriptor& d, const Permutation& sigma) {
    switch (d.family) {
        case StatFamily::gap_descent_count:
            return descent_profile(sigma, d.r).rdes;
        case StatFamily::gap_major:
            return descent_profile(sigma, d.r).rmaj;
        case StatFamily::gap_level_exc_count:
            return gap_level_exc_count(sigma, d.gap, d.level);
        case StatFamily::gap_level_den:
            return gap_level_den(sigma, d.gap, d.level);
        case StatFamily::inv_count:
            return inv_count(sigma);
        case StatFamily::zero:
            return 0;
    }
    throw invalid_input_error("unknown statistic family");
}

namespace {

struct ParsedParams {
    bool has_g = false, has_l = false, has_h = false, has_r = false;
    int g = 1, l = 1, h = 1, r = 1;
};

ParsedParams parse_params(std::string_view name, std::string_view text) {
    ParsedParams out;
    size_t i = 0;
    while (i < text.size()) {
        size_t j = text.find(',', i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view item = text.substr(i, j - i);
        size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw invalid_input_error("bad parameter '" + std::string(item) +
                                      "' for statistic '" + std::string(name) + "'");
        }
        std::string_view key = item.substr(0, eq);
        std::string_view val = item.substr(eq + 1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), value);
        if (ec != std::errc() || ptr != val.data() + val.size() || value < 1) {
            throw invalid_input_error("bad parameter value '" + std::string(item) +
                                      "' for statistic '" + std::string(name) +
                                      "' (expected an integer >= 1)");
        }
        if (key == "g") {
            out.has_g = true;
            out.g = value;
        } else if (key == "l") {
            out.has_l = true;
            out.l = value;
        } else if (key == "h") {
            out.has_h = true;
            out.h = value;
        } else if (key == "r") {
            out.has_r = true;
            out.r = value;
        } else {
            throw invalid_input_error("unknown parameter '" + std::string(key) +
                                      "' for statistic '" + std::string(name) + "'");
        }
        i = j + 1;
        if (j == text.size()) break;
    }
    return out;
}

void forbid(const ParsedParams& p, std::string_view name, bool allow_g, bool allow_l,
            bool allow_h, bool allow_r) {
    auto bad = [&](const char* key) {
        throw invalid_input_error("parameter '" + std::string(key) +
                                  "' is not accepted by statistic '" + std::string(name) +
                                  "'");
    };
    if (p.has_g && !allow_g) bad("g");
    if (p.has_l && !allow_l) bad("l");
    if (p.has_h && !allow_h) bad("h");
    if (p.has_r && !allow_r) bad("r");
}

}  // namespace

StatDescriptor StatDescriptor::parse(std::string_view text) {
    size_t colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    ParsedParams params;
    if (colon != std::string_view::npos) {
        params = parse_params(name, text.substr(colon + 1));
    }
    if (name == "des" || name == "maj" || name == "inv" || name == "exc" ||
        name == "den" || name == "zero") {
        forbid(params, name, false, false, false, false);
        if (name == "des") return des();
        if (name == "maj") return maj();
        if (name == "inv") return inv();
        if (name == "exc") return exc();
        if (name == "den") return den();
        return zero_stat();
    }
    if (name == "rdes" || name == "rmaj" || name == "rexc" || name == "rden") {
        forbid(params, name, false, false, false, true);
        if (name == "rdes") return rdes(params.r);
        if (name == "rmaj") return rmaj(params.r);
        if (name == "rexc") return rexc(params.r);
        return rden(params.r);
    }
    if (name == "exc_l") {
        forbid(params, name, false, true, false, false);
        return exc_level(params.l);
    }
    if (name == "den_h") {
        forbid(params, name, false, false, true, false);
        return den_level(params.h);
    }
    if (name == "gexc") {
        forbid(params, name, true, true, false, false);
        return gap_exc(params.g, params.l);
    }
    if (name == "gden") {
        forbid(params, name, true, false, true, false);
        return gap_den(params.g, params.h);
    }
    throw invalid_input_error("unknown statistic '" + std::string(name) + "'");
}

std::string StatDescriptor::str() const {
    switch (family) {
        case StatFamily::gap_descent_count:
            return r == 1 ? "des" : "rdes:r=" + std::to_string(r);
        case StatFamily::gap_major:
            return r == 1 ? "maj" : "rmaj:r=" + std::to_string(r);
        case StatFamily::gap_level_exc_count:
            if (gap == 1 && level == 1) return "exc";
            if (gap == 1) return "exc_l:l=" + std::to_string(level);
            if (level == 1) return "rexc:r=" + std::to_string(gap);
            return "gexc:g=" + std::to_string(gap) + ",l=" + std::to_string(level);
        case StatFamily::gap_level_den:
            if (gap == 1 && level == 1) return "den";
            if (gap == 1) return "den_h:h=" + std::to_string(level);
            if (level == 1) return "rden:r=" + std::to_string(gap);
            return "gden:g=" + std::to_string(gap) + ",h=" + std::to_string(level);
        case StatFamily::inv_count:
            return "inv";
        case StatFamily::zero:
            return "zero";
    }
    return "?";
}

}  // namespace denstat
