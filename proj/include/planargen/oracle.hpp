// Generating-function oracle: tree series, 3-connected maps, networks,
// 2-connected, connected and planar families, singularity search and tuning.
#pragma once

#include <boost/multiprecision/float128.hpp>

#include <optional>
#include <string>
#include <vector>

#include "planargen/core.hpp"

namespace planargen {

using quad = boost::multiprecision::float128;

struct OutsideDomain : NumericError {
    using NumericError::NumericError;
};

struct CorruptTable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int default_digits = 30;
inline constexpr int max_digits = 33;

// value and first partials of one series at a point
struct Partials {
    quad v = 0, dz = 0, dw = 0;
};

struct TreeBlock {
    Partials R_black, R_white, R_black_hat, R_white_hat, R_black_as, R_white_as, K_under;
};

struct G3Values {
    quad G3 = 0, G3_z = 0, G3_w = 0;
    quad G3_zz = 0, G3_zw = 0, G3_ww = 0;
};

struct NetworkValues {
    quad D = 0, S = 0, P = 0, H = 0;
    quad D1 = 0, S1 = 0, P1 = 0, H1 = 0;  // d/dz
    quad D2 = 0;                          // d2/dz2
};

struct TwoConnectedValues {
    quad G2_arrow = 0, G2_arrow_prime = 0, G2_under = 0, G2 = 0;
    quad G2_prime = 0, G2_under_prime = 0, G2_dprime = 0;
};

struct ConnectedValues {
    quad z = 0, G1 = 0, G1_prime = 0, G1_dprime = 0;
};

struct PlanarValues {
    quad G = 0, G_prime = 0, G_dprime = 0;
};

struct OracleTable {
    int digits = default_digits;
    quad x = 0, y = 0, z = 0, w = 0;
    // trees at (z, w)
    quad R_black = 0, R_white = 0, R_black_hat = 0, R_white_hat = 0;
    quad R_black_as = 0, R_white_as = 0, K_under = 0, K = 0, K_prime = 0;
    // rooted 3-connected at (z, w)
    quad G3 = 0, G3_z = 0, G3_w = 0;
    // networks at (z, y)
    quad D = 0, S = 0, P = 0, H = 0, D1 = 0, S1 = 0, P1 = 0, H1 = 0;
    // 2-connected at (z, y)
    quad G2_arrow = 0, G2_arrow_prime = 0, G2_under = 0, G2_prime = 0;
    quad G2_under_prime = 0, G2_dprime = 0;
    // connected and planar at (x, y)
    quad G1 = 0, G1_prime = 0, G1_dprime = 0;
    quad G = 0, G_prime = 0, G_dprime = 0;

    double d(quad OracleTable::*field) const { return static_cast<double>(this->*field); }
};

struct TuningResult {
    long long n = 1;
    std::optional<double> mu;
    quad rho = 0;
    quad x_n = 0;
    quad y = 1;
};

// named fields of OracleTable, in file order
struct TableField {
    const char* name;
    quad OracleTable::*member;
};
const std::vector<TableField>& table_fields();

TreeBlock tree_series(quad z, quad w, int digits = default_digits);
G3Values g3_values(quad z, quad w, int digits = default_digits);
NetworkValues network_values(quad z, quad y, int digits = default_digits);
TwoConnectedValues two_connected_values(quad z, quad y, int digits = default_digits);
ConnectedValues connected_values(quad x, quad y, int digits = default_digits);
PlanarValues planar_values(quad x, quad y, int digits = default_digits);

// unrooted asymmetric trees K(z,w) and dK/dz, by quadrature of the rooted series over w
std::pair<quad, quad> tree_unrooted(quad z, quad w, int digits = default_digits);

quad rho_g(quad y, int digits = default_digits);
quad mu_of_y(quad y, int digits = 18);
quad y_of_mu(double mu, int digits = 18);

// blocks filled at the given parameters; later blocks left zero
OracleTable tree_table(quad z, quad w, int digits = default_digits);
OracleTable network_table(quad z, quad y, int digits = default_digits);
OracleTable evaluate_table(quad x, quad y, int digits = default_digits);
std::pair<TuningResult, OracleTable> build_table(long long n, std::optional<double> mu,
                                                 int digits = default_digits);

// throws NumericError naming the first identity that fails at relative tol
void check_identities(const OracleTable& t, double rel_tol);

void write_table(const std::string& path, const TuningResult& tuning, const OracleTable& table);
std::pair<TuningResult, OracleTable> read_table(const std::string& path);
std::string format_table(const TuningResult& tuning, const OracleTable& table);
std::pair<TuningResult, OracleTable> parse_table(const std::string& text);

std::string to_decimal(quad v);
quad from_decimal(const std::string& s);

}  // namespace planargen
