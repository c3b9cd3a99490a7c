#include "svir/module_basis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace svir {

// ---------------------------------------------------------------- partitions

Pseudopartition::Pseudopartition(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end());
    for (int k : parts) add_part(k);
}

void Pseudopartition::add_part(int k, int multiplicity) {
    if (k < 0) throw std::invalid_argument("negative pseudopartition part");
    if (multiplicity <= 0) throw std::invalid_argument("non-positive multiplicity");
    auto it = std::lower_bound(exponents_.begin(), exponents_.end(), k,
                               [](const auto& e, int part) { return e.first < part; });
    if (it != exponents_.end() && it->first == k)
        it->second += multiplicity;
    else
        exponents_.insert(it, {k, multiplicity});
}

void Pseudopartition::remove_largest() {
    if (--exponents_.back().second == 0) exponents_.pop_back();
}

int Pseudopartition::multiplicity(int k) const {
    for (const auto& [part, mult] : exponents_)
        if (part == k) return mult;
    return 0;
}

long Pseudopartition::size() const {
    long total = 0;
    for (const auto& [part, mult] : exponents_) total += static_cast<long>(part) * mult;
    return total;
}

int Pseudopartition::length() const {
    int total = 0;
    for (const auto& [part, mult] : exponents_) total += mult;
    return total;
}

std::strong_ordering Pseudopartition::operator<=>(const Pseudopartition& other) const {
    // Lexicographic on the (sparse) exponent vector, low parts first.
    auto a = exponents_.begin();
    auto b = other.exponents_.begin();
    while (a != exponents_.end() && b != other.exponents_.end()) {
        if (a->first != b->first) {
            // The side whose next part is smaller has a nonzero entry where
            // the other has zero, so it is lexicographically larger.
            return a->first < b->first ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
        }
        if (a->second != b->second)
            return a->second <=> b->second;
        ++a;
        ++b;
    }
    if (a != exponents_.end()) return std::strong_ordering::greater;
    if (b != other.exponents_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

StrictPseudopartition::StrictPseudopartition(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end());
    for (int k : parts) add_part(k);
}

void StrictPseudopartition::add_part(int k) {
    if (k < 0) throw std::invalid_argument("negative strict pseudopartition part");
    auto it = std::lower_bound(parts_.begin(), parts_.end(), k);
    if (it != parts_.end() && *it == k)
        throw std::invalid_argument("duplicate part in strict pseudopartition");
    parts_.insert(it, k);
}

void StrictPseudopartition::remove_largest() { parts_.pop_back(); }

bool StrictPseudopartition::contains(int k) const {
    return std::binary_search(parts_.begin(), parts_.end(), k);
}

long StrictPseudopartition::size() const {
    long total = 0;
    for (int k : parts_) total += k;
    return total;
}

// ------------------------------------------------------------------ ψ values

std::optional<Rational> psi_value(const WhittakerData& data, const GeneratorIndex& g) {
    if (g.sector != data.sector)
        throw std::invalid_argument("psi_value: generator from wrong sector");
    if (g.kind == GeneratorIndex::Kind::C) return data.c;
    if (!is_psi_domain(g)) return std::nullopt;
    if (g.kind == GeneratorIndex::Kind::G) return Rational(0);
    if (g.d == 2) return data.a;
    if (g.d == 4) return data.b;
    return Rational(0);
}

// ----------------------------------------------------------- basis monomials

int creation_g_index_doubled(Sector s, int part) {
    return 2 - eps_doubled(s) - 2 * part;
}

int creation_g_part(Sector s, int d) {
    const int num = 2 - eps_doubled(s) - d;
    if (num % 2 != 0 || num < 0)
        throw std::invalid_argument("not a creation G-index: d=" + std::to_string(d));
    return num / 2;
}

BasisMonomial::BasisMonomial(Sector sector, Pseudopartition lambda,
                             StrictPseudopartition mu)
    : sector_(sector), lambda_(std::move(lambda)), mu_(std::move(mu)) {}

BasisMonomial BasisMonomial::from_factors(Sector sector,
                                          const std::vector<GeneratorIndex>& factors) {
    BasisMonomial m(sector);
    bool seen_g = false;
    int prev_l = 0, prev_g = 0;
    bool have_l = false, have_g = false;
    for (const auto& g : factors) {
        if (g.sector != sector)
            throw std::invalid_argument("from_factors: generator from wrong sector");
        if (!is_creation(g))
            throw std::invalid_argument("from_factors: non-creation factor " +
                                        format_generator(g));
        if (g.kind == GeneratorIndex::Kind::L) {
            if (seen_g)
                throw std::invalid_argument("from_factors: L-factor right of a G-factor");
            if (have_l && g.d < prev_l)
                throw std::invalid_argument("from_factors: L-factors out of order");
            prev_l = g.d;
            have_l = true;
            m.lambda_.add_part(-g.d / 2);
        } else {
            if (have_g && g.d <= prev_g)
                throw std::invalid_argument("from_factors: G-factors out of order");
            prev_g = g.d;
            have_g = true;
            seen_g = true;
            m.mu_.add_part(creation_g_part(sector, g.d));
        }
    }
    return m;
}

GeneratorIndex BasisMonomial::head_factor() const {
    if (!lambda_.empty()) return gen_L(sector_, -lambda_.largest_part());
    return gen_G_doubled(sector_,
                         creation_g_index_doubled(sector_, mu_.largest_part()));
}

BasisMonomial BasisMonomial::without_head() const {
    BasisMonomial m = *this;
    if (!m.lambda_.empty())
        m.lambda_.remove_largest();
    else
        m.mu_.remove_largest();
    return m;
}

std::vector<GeneratorIndex> BasisMonomial::factors() const {
    std::vector<GeneratorIndex> out;
    const auto& exps = lambda_.exponents();
    for (auto it = exps.rbegin(); it != exps.rend(); ++it)
        for (int i = 0; i < it->second; ++i) out.push_back(gen_L(sector_, -it->first));
    const auto& parts = mu_.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        out.push_back(gen_G_doubled(sector_, creation_g_index_doubled(sector_, *it)));
    return out;
}

int BasisMonomial::deg_doubled() const {
    long deg = 2 * lambda_.size();
    for (int part : mu_.parts()) deg += 2 * part - eps_doubled(sector_);
    return static_cast<int>(deg);
}

int BasisMonomial::fdeg_doubled() const {
    return deg_doubled() + 2 * lambda_.multiplicity(0);
}

int BasisMonomial::weight_doubled() const {
    long wt = -2 * lambda_.size();
    for (int part : mu_.parts()) wt += creation_g_index_doubled(sector_, part);
    return static_cast<int>(wt);
}

Parity BasisMonomial::parity() const {
    return mu_.length() % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::string BasisMonomial::to_string() const {
    std::string out;
    for (const auto& g : factors()) out += format_generator(g);
    out += "w";
    return out;
}

std::strong_ordering BasisMonomial::operator<=>(const BasisMonomial& other) const {
    if (auto c = sector_ <=> other.sector_; c != 0) return c;
    if (auto c = fdeg_doubled() <=> other.fdeg_doubled(); c != 0) return c;
    if (auto c = deg_doubled() <=> other.deg_doubled(); c != 0) return c;
    if (auto c = lambda_ <=> other.lambda_; c != 0) return c;
    return mu_ <=> other.mu_;
}

// ------------------------------------------------------------ module vectors

ModuleVector::ModuleVector(const BasisMonomial& m, const Rational& coeff) {
    add(m, coeff);
}

void ModuleVector::add(const BasisMonomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    if (!terms_.empty() && terms_.begin()->first.sector() != m.sector())
        throw std::invalid_argument("mixed sectors in ModuleVector");
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
    for (const auto& [m, q] : other.terms_) add(m, q);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
    for (const auto& [m, q] : other.terms_) add(m, -q);
    return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& scale) {
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, q] : terms_) q *= scale;
    return *this;
}

Rational ModuleVector::coefficient(const BasisMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int ModuleVector::maxdeg_doubled() const {
    if (terms_.empty())
        throw std::invalid_argument("maxdeg of the zero vector is undefined");
    int best = terms_.begin()->first.deg_doubled();
    for (const auto& [m, q] : terms_) best = std::max(best, m.deg_doubled());
    return best;
}

int ModuleVector::maxfdeg_doubled() const {
    if (terms_.empty())
        throw std::invalid_argument("maxfdeg of the zero vector is undefined");
    // Canonical order sorts by fdeg first, so the last key is maximal.
    return terms_.rbegin()->first.fdeg_doubled();
}

std::string ModuleVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : terms_) {
        Rational mag = q;
        if (first) {
            if (q < 0) {
                os << "-";
                mag = -q;
            }
        } else {
            os << (q < 0 ? " - " : " + ");
            mag = abs(q);
        }
        if (mag != 1) os << svir::to_string(mag) << " ";
        os << m.to_string();
        first = false;
    }
    return os.str();
}

ModuleVector operator+(ModuleVector lhs, const ModuleVector& rhs) {
    lhs += rhs;
    return lhs;
}

ModuleVector operator-(ModuleVector lhs, const ModuleVector& rhs) {
    lhs -= rhs;
    return lhs;
}

ModuleVector operator*(const Rational& scale, ModuleVector v) {
    v *= scale;
    return v;
}

ModuleVector vacuum_vector(Sector s) { return ModuleVector(BasisMonomial(s)); }

}  // namespace svir
