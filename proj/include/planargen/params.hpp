// Oracle values downcast to machine doubles, as consumed by the samplers.
#pragma once

#include "planargen/oracle.hpp"

namespace planargen {

struct Params {
    double x = 0, y = 0, z = 0, w = 0;
    double R_black = 0, R_white = 0, R_black_hat = 0, R_white_hat = 0;
    double R_black_as = 0, R_white_as = 0, K_under = 0, K = 0, K_prime = 0;
    double G3 = 0, G3_z = 0, G3_w = 0;
    double D = 0, S = 0, P = 0, H = 0, D1 = 0, S1 = 0, P1 = 0, H1 = 0;
    double G2_arrow = 0, G2_arrow_prime = 0, G2_under = 0, G2_prime = 0;
    double G2_under_prime = 0, G2_dprime = 0;
    double G1 = 0, G1_prime = 0, G1_dprime = 0;
    double G = 0, G_prime = 0, G_dprime = 0;
};

inline Params params_from(const OracleTable& t) {
    Params p;
    auto d = [&](quad OracleTable::*f) { return t.d(f); };
    p.x = d(&OracleTable::x);
    p.y = d(&OracleTable::y);
    p.z = d(&OracleTable::z);
    p.w = d(&OracleTable::w);
    p.R_black = d(&OracleTable::R_black);
    p.R_white = d(&OracleTable::R_white);
    p.R_black_hat = d(&OracleTable::R_black_hat);
    p.R_white_hat = d(&OracleTable::R_white_hat);
    p.R_black_as = d(&OracleTable::R_black_as);
    p.R_white_as = d(&OracleTable::R_white_as);
    p.K_under = d(&OracleTable::K_under);
    p.K = d(&OracleTable::K);
    p.K_prime = d(&OracleTable::K_prime);
    p.G3 = d(&OracleTable::G3);
    p.G3_z = d(&OracleTable::G3_z);
    p.G3_w = d(&OracleTable::G3_w);
    p.D = d(&OracleTable::D);
    p.S = d(&OracleTable::S);
    p.P = d(&OracleTable::P);
    p.H = d(&OracleTable::H);
    p.D1 = d(&OracleTable::D1);
    p.S1 = d(&OracleTable::S1);
    p.P1 = d(&OracleTable::P1);
    p.H1 = d(&OracleTable::H1);
    p.G2_arrow = d(&OracleTable::G2_arrow);
    p.G2_arrow_prime = d(&OracleTable::G2_arrow_prime);
    p.G2_under = d(&OracleTable::G2_under);
    p.G2_prime = d(&OracleTable::G2_prime);
    p.G2_under_prime = d(&OracleTable::G2_under_prime);
    p.G2_dprime = d(&OracleTable::G2_dprime);
    p.G1 = d(&OracleTable::G1);
    p.G1_prime = d(&OracleTable::G1_prime);
    p.G1_dprime = d(&OracleTable::G1_dprime);
    p.G = d(&OracleTable::G);
    p.G_prime = d(&OracleTable::G_prime);
    p.G_dprime = d(&OracleTable::G_dprime);
    return p;
}

}  // namespace planargen
