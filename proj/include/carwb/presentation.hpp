#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "carwb/matrix.hpp"

namespace carwb {

// One factor of a monomial in the generators: a_{gen+1} or its adjoint.
struct StarFactor {
    int gen = 0;  // 0-based; the grammar names generators a1..ad
    bool star = false;

    friend bool operator==(const StarFactor&, const StarFactor&) = default;
};

// A word in the generators and their adjoints; empty word is the unit.
struct StarWord {
    std::vector<StarFactor> factors;

    friend bool operator==(const StarWord&, const StarWord&) = default;
};

struct Term {
    Complex coeff{1.0, 0.0};
    StarWord word;
};

bool operator==(const Term& a, const Term& b);

// An equation  sum(lhs) = sum(rhs)  between *-polynomials.
struct Relation {
    std::vector<Term> lhs;
    std::vector<Term> rhs;
};

bool operator==(const Relation& a, const Relation& b);

struct Presentation {
    int generator_count = 0;
    std::vector<Relation> relations;
    std::string name;
    std::map<std::string, Complex> params;
};

enum class PresetName { CAR, QCCR, TCAR, WTCAR, DISK, DISK_NORMALIZED, WCAR, WCAR_Y };

struct PresetParams {
    int d = 1;
    double q = 0.0;
    double mu = 0.5;
    Complex y{0.0, 0.0};
};

// The relation families shipped with the workbench. DISK_NORMALIZED is the
// q = -1 disk relation rescaled to a*a + aa* = 1.
Presentation preset(PresetName name, const PresetParams& params = {});

// Parse relation text (one relation per line, '#' comments) against the
// grammar  relation := sum "=" sum.
Presentation parse_relations(const std::string& text, int generator_count);

// Inverse of parse_relations up to structural equality.
std::string render(const Presentation& p);
std::string render(const Relation& r);

// Evaluate a word / term sum in a concrete matrix assignment.
Mat eval_word(const StarWord& w, const std::vector<Mat>& assignment);
Mat eval_terms(const std::vector<Term>& terms, const std::vector<Mat>& assignment);

// max over relations of ||sum(lhs) - sum(rhs)|| in operator norm.
double residual(const Presentation& p, const std::vector<Mat>& assignment);

}  // namespace carwb
