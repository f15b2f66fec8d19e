#include "qgalois/cartan.hpp"

#include <sstream>

#include "qgalois/errors.hpp"

namespace qgalois {

namespace {

constexpr int kMaxRank = 8;

CartanDatum diagonal_datum(int rank) {
    CartanDatum datum;
    datum.a.assign(rank, std::vector<int>(rank, 0));
    datum.d.assign(rank, 1);
    for (int i = 0; i < rank; ++i) datum.a[i][i] = 2;
    return datum;
}

void link(CartanDatum& datum, int i, int j, int aij, int aji) {
    datum.a[i][j] = aij;
    datum.a[j][i] = aji;
}

}  // namespace

CartanFamily cartan_family_from_string(const std::string& name) {
    if (name == "A") return CartanFamily::A;
    if (name == "B") return CartanFamily::B;
    if (name == "C") return CartanFamily::C;
    if (name == "D") return CartanFamily::D;
    if (name == "G2") return CartanFamily::G2;
    throw Error("unknown Cartan family: " + name);
}

std::string to_string(CartanFamily f) {
    switch (f) {
        case CartanFamily::A: return "A";
        case CartanFamily::B: return "B";
        case CartanFamily::C: return "C";
        case CartanFamily::D: return "D";
        case CartanFamily::G2: return "G2";
    }
    return "?";
}

CartanDatum cartan_preset(CartanFamily family, int rank) {
    if (rank > kMaxRank) {
        throw UnsupportedRankError("rank " + std::to_string(rank) + " exceeds the supported maximum 8");
    }
    const auto reject_below = [&](int min_rank) {
        if (rank < min_rank) {
            throw UnsupportedRankError("family " + to_string(family) + " needs rank >= " +
                                       std::to_string(min_rank) + ", got " + std::to_string(rank));
        }
    };

    switch (family) {
        case CartanFamily::A: {
            reject_below(1);
            CartanDatum datum = diagonal_datum(rank);
            for (int i = 0; i + 1 < rank; ++i) link(datum, i, i + 1, -1, -1);
            return datum;
        }
        case CartanFamily::B: {
            // Long chain with one short root at the end: d = (2,...,2,1).
            reject_below(2);
            CartanDatum datum = diagonal_datum(rank);
            for (int i = 0; i + 1 < rank; ++i) link(datum, i, i + 1, -1, -1);
            link(datum, rank - 2, rank - 1, -1, -2);
            datum.d.assign(rank, 2);
            datum.d[rank - 1] = 1;
            return datum;
        }
        case CartanFamily::C: {
            // Transpose of B: short chain, one long root at the end: d = (1,...,1,2).
            reject_below(2);
            CartanDatum datum = diagonal_datum(rank);
            for (int i = 0; i + 1 < rank; ++i) link(datum, i, i + 1, -1, -1);
            link(datum, rank - 2, rank - 1, -2, -1);
            datum.d[rank - 1] = 2;
            return datum;
        }
        case CartanFamily::D: {
            reject_below(3);
            CartanDatum datum = diagonal_datum(rank);
            for (int i = 0; i + 1 < rank - 1; ++i) link(datum, i, i + 1, -1, -1);
            link(datum, rank - 3, rank - 1, -1, -1);
            return datum;
        }
        case CartanFamily::G2: {
            if (rank != 2) throw UnsupportedRankError("family G2 exists only at rank 2");
            CartanDatum datum = diagonal_datum(2);
            link(datum, 0, 1, -1, -3);
            datum.d = {3, 1};  // forced by d_1 a_12 = d_2 a_21 = -3
            return datum;
        }
    }
    throw Error("unreachable Cartan family");
}

ValidationReport validate(const CartanDatum& datum) {
    const int t = datum.rank();
    std::ostringstream msg;
    if (t == 0 || datum.a.size() != static_cast<std::size_t>(t)) {
        return {false, "matrix and symmetrizer sizes disagree or rank is zero"};
    }
    for (const auto& row : datum.a) {
        if (row.size() != static_cast<std::size_t>(t)) {
            return {false, "Cartan matrix is not square"};
        }
    }
    for (int i = 0; i < t; ++i) {
        if (datum.a[i][i] != 2) {
            msg << "a_" << (i + 1) << (i + 1) << " = " << datum.a[i][i] << ", expected 2";
            return {false, msg.str()};
        }
    }
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            if (i != j && datum.a[i][j] > 0) {
                msg << "a_" << (i + 1) << (j + 1) << " = " << datum.a[i][j] << " is positive off the diagonal";
                return {false, msg.str()};
            }
        }
    }
    for (int i = 0; i < t; ++i) {
        if (datum.d[i] < 1 || datum.d[i] > 3) {
            msg << "d_" << (i + 1) << " = " << datum.d[i] << " is not in {1,2,3}";
            return {false, msg.str()};
        }
    }
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            if (datum.d[i] * datum.a[i][j] != datum.d[j] * datum.a[j][i]) {
                msg << "d_" << (i + 1) << " a_" << (i + 1) << (j + 1) << " = " << datum.d[i] * datum.a[i][j]
                    << " but d_" << (j + 1) << " a_" << (j + 1) << (i + 1) << " = " << datum.d[j] * datum.a[j][i];
                return {false, msg.str()};
            }
        }
    }
    return {true, ""};
}

}  // namespace qgalois
