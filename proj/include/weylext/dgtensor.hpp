#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylext/grading.hpp"
#include "weylext/psi.hpp"

namespace weylext::dg {

/// How consecutive factors of a tensor word are matched at the vertex level.
/// The vertex-reversing convention (right vertex t followed by left vertex
/// p+1-t) is the one fixed by calibration; the others exist as rejectable
/// candidates.
enum class JunctionStyle { SigmaAll, Plain, SigmaFirst, SigmaAlternating };

std::string junction_style_name(JunctionStyle s);
std::optional<JunctionStyle> junction_style_from_name(const std::string& name);

/// Formal integer combination of tensor words, indexed into a chain.
struct Element {
    std::map<int, int> coef;
    bool empty() const { return coef.empty(); }
};

/// The dg bimodule of tensor words in degree i of the tensor algebra of the
/// twisted Koszul complexes: for i <= -1 a word has 1-i factors (the last one
/// untwisted), for i = 0 a single factor with zero differential, and for
/// i = +1 two factors of which the second indexes a dual basis vector.
/// A global shift by i is applied to the j-grading.
class DgChain {
public:
    int p = 0;
    int i = 0;
    JunctionStyle style = JunctionStyle::SigmaAll;

    struct Word {
        std::vector<psi::PsiMonomial> factors;
        int s, t, j, k;
        friend auto operator<=>(const Word&, const Word&) = default;
    };

    std::vector<Word> words;
    std::vector<std::vector<std::pair<int, int>>> diff;  // word -> (coef, word)
    bool junction_broken = false;  // a differential term left the word set
    std::string junction_note;

    static DgChain build(int p, int i, JunctionStyle style, int cap = 6);

    int nfactors() const { return i >= 0 ? (i == 0 ? 1 : 2) : 1 - i; }
    int index_of(const std::vector<psi::PsiMonomial>& factors) const;

    /// Exact check that d composed with itself vanishes on every word.
    void verify_d_squared() const;

    /// Sector-by-sector homology dimensions; raises on a broken complex and,
    /// in Both mode, on any disagreement between the two fields.
    GradedDims homology(FieldMode mode, std::uint64_t prime) const;

    Element apply_d(const Element& e) const;

    struct CycleStatus {
        bool cycle;
        bool boundary;
    };
    CycleStatus verify_cycle(const Element& e, FieldMode mode, std::uint64_t prime) const;

    /// Left/right multiplication by a quiver monomial (i <= 0 chains only).
    Element act(const Element& e, const psi::PsiMonomial& m, bool left) const;

    /// Restrict an element to the components with the given left vertex.
    Element slice_left(const Element& e, int s) const;

    std::string describe(const Element& e) const;

private:
    std::map<std::vector<psi::PsiMonomial>, int> index_;
};

/// Tensor-algebra concatenation of words/elements: the last factor of a word
/// of chain A multiplies into the first factor of a word of chain B. Both
/// chains must have i <= -1; the result lives in degree i_A + i_B.
Element concat(const DgChain& a, const Element& ea, const DgChain& b, const Element& eb,
               const DgChain& target);

/// Explicit homology representatives.
/// x generator: e_p (x) (xi (x) xi)^f (x) (x^{p-1})^{...} (x) e_1.
std::optional<Element> x_cycle(const DgChain& c, int f);
/// y generator: as above with a final x^{p-2} xi factor before e_1.
std::optional<Element> y_cycle(const DgChain& c, int f);
/// The degree -2 element  xi (x) xi (x) 1  -  1 (x) xi (x) xi.
Element w_element(const DgChain& c);
/// e-th concatenation power of the w element (chain must be degree -2e).
Element w_power(const DgChain& c2, const DgChain& target, int e);
/// Alternating all-xi word sliced at left vertex l (odd-degree chains).
std::optional<Element> xi_chain_element(const DgChain& c, int l);

}  // namespace weylext::dg
