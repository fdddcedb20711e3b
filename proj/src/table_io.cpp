#include <fstream>
#include <map>
#include <sstream>

#include "planargen/oracle.hpp"

namespace planargen {

const std::vector<TableField>& table_fields() {
    static const std::vector<TableField> fields = {
        {"x", &OracleTable::x},
        {"y", &OracleTable::y},
        {"z", &OracleTable::z},
        {"w", &OracleTable::w},
        {"R_black", &OracleTable::R_black},
        {"R_white", &OracleTable::R_white},
        {"R_black_hat", &OracleTable::R_black_hat},
        {"R_white_hat", &OracleTable::R_white_hat},
        {"R_black_as", &OracleTable::R_black_as},
        {"R_white_as", &OracleTable::R_white_as},
        {"K_under", &OracleTable::K_under},
        {"K", &OracleTable::K},
        {"K_prime", &OracleTable::K_prime},
        {"G3", &OracleTable::G3},
        {"G3_z", &OracleTable::G3_z},
        {"G3_w", &OracleTable::G3_w},
        {"D", &OracleTable::D},
        {"S", &OracleTable::S},
        {"P", &OracleTable::P},
        {"H", &OracleTable::H},
        {"D_prime", &OracleTable::D1},
        {"S_prime", &OracleTable::S1},
        {"P_prime", &OracleTable::P1},
        {"H_prime", &OracleTable::H1},
        {"G2_arrow", &OracleTable::G2_arrow},
        {"G2_arrow_prime", &OracleTable::G2_arrow_prime},
        {"G2_under", &OracleTable::G2_under},
        {"G2_prime", &OracleTable::G2_prime},
        {"G2_under_prime", &OracleTable::G2_under_prime},
        {"G2_dprime", &OracleTable::G2_dprime},
        {"G1", &OracleTable::G1},
        {"G1_prime", &OracleTable::G1_prime},
        {"G1_dprime", &OracleTable::G1_dprime},
        {"G", &OracleTable::G},
        {"G_prime", &OracleTable::G_prime},
        {"G_dprime", &OracleTable::G_dprime},
    };
    return fields;
}

std::string to_decimal(quad v) {
    return v.str(std::numeric_limits<quad>::max_digits10, std::ios_base::scientific);
}

quad from_decimal(const std::string& s) {
    try {
        return quad(s);
    } catch (const std::exception&) {
        throw CorruptTable("not a decimal number: '" + s + "'");
    }
}

std::string format_table(const TuningResult& tuning, const OracleTable& t) {
    std::ostringstream out;
    out << "# planargen oracle table\n";
    out << "format = 1\n";
    out << "n = " << tuning.n << "\n";
    out << "mu = ";
    if (tuning.mu) {
        std::ostringstream m;
        m.precision(17);
        m << *tuning.mu;
        out << m.str() << "\n";
    } else {
        out << "none\n";
    }
    out << "digits = " << t.digits << "\n";
    out << "rho = " << to_decimal(tuning.rho) << "\n";
    out << "x_n = " << to_decimal(tuning.x_n) << "\n";
    for (const auto& f : table_fields())
        out << f.name << " = " << to_decimal(t.*f.member) << "\n";
    return out.str();
}

std::pair<TuningResult, OracleTable> parse_table(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CorruptTable("line " + std::to_string(lineno) + ": expected 'key = value'");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw CorruptTable("line " + std::to_string(lineno) + ": empty key or value");
        if (!kv.emplace(key, value).second)
            throw CorruptTable("duplicate key '" + key + "'");
    }
    auto take = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw CorruptTable("missing key '" + key + "'");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto to_int = [&](const std::string& key) {
        std::string v = take(key);
        try {
            std::size_t used = 0;
            long long r = std::stoll(v, &used);
            if (used != v.size())
                throw std::invalid_argument(v);
            return r;
        } catch (const std::exception&) {
            throw CorruptTable("key '" + key + "': not an integer");
        }
    };
    if (to_int("format") != 1)
        throw CorruptTable("unsupported table format");
    TuningResult tuning;
    OracleTable t;
    tuning.n = to_int("n");
    std::string mu = take("mu");
    if (mu != "none") {
        try {
            tuning.mu = std::stod(mu);
        } catch (const std::exception&) {
            throw CorruptTable("key 'mu': not a number");
        }
    }
    t.digits = static_cast<int>(to_int("digits"));
    tuning.rho = from_decimal(take("rho"));
    tuning.x_n = from_decimal(take("x_n"));
    for (const auto& f : table_fields())
        t.*f.member = from_decimal(take(f.name));
    if (!kv.empty())
        throw CorruptTable("unknown key '" + kv.begin()->first + "'");
    tuning.y = t.y;
    return {tuning, t};
}

void write_table(const std::string& path, const TuningResult& tuning, const OracleTable& table) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << format_table(tuning, table);
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

std::pair<TuningResult, OracleTable> read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
}

}  // namespace planargen
