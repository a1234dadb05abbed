#pragma once

#include <array>
#include <string>

namespace fuzzytopo::tables {

/// Orders used by the comparison tables.
inline constexpr std::array<int, 10> kOrders = {6,  8,  10, 12, 15,
                                                20, 25, 30, 40, 50};
/// Fuzzy sizes of the two table halves.
inline constexpr std::array<double, 2> kSizes = {0.5, 1.0};

/// Published values being reproduced: kTable1[i][j][f] is the Sombor value at
/// order kOrders[i], fuzzy size kSizes[j], family f in (path, star, cycle,
/// complete). The star/cycle/complete columns agree with the uniform-scheme
/// computation to 4 decimals; the path column does not (its membership scheme
/// is not recoverable), which the emitted CSV flags per row.
extern const double kTable1[10][2][4];

/// Published per-index values at n = 10, m_mu = 1: kTable2[f][k] with family
/// f as above and k in (SO, M1, R, N). The path SO and path R entries
/// disagree with the uniform-scheme computation; everything else agrees.
extern const double kTable2[4][4];

/// Absolute tolerance used by the agreement flags (4-decimal rounding).
inline constexpr double kAgreementTolerance = 5e-5;

/// Computed uniform-scheme value for one table cell.
double computed_table1_value(int family, int n, double m_mu);
double computed_table2_value(int family, int index);

/// CSV with one row per (n, m_mu): computed value, published value and an
/// agreement flag for each family.
std::string table1_csv();

/// CSV with one row per family: computed, published and agreement flag for
/// each of SO, M1, R, N at n = 10, m_mu = 1.
std::string table2_csv();

/// Long-format data behind the three comparison figures:
/// figure,family,n,index,value.
std::string figures_csv();

}  // namespace fuzzytopo::tables
