#include "famint/fam.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace famint {

Fam::Fam(AlgebraPtr algebra, std::vector<Rat> values)
    : algebra_(std::move(algebra)), values_(std::move(values)) {}

Fam Fam::validate(AlgebraPtr algebra, std::vector<Rat> values_by_member) {
    if (!algebra) throw InvalidInput("measure requires an algebra");
    const auto& members = algebra->members();
    if (values_by_member.size() != members.size())
        throw InvalidInput("measure must be total: expected " + std::to_string(members.size()) +
                           " values, got " + std::to_string(values_by_member.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
        if (values_by_member[i] < 0)
            throw InvalidInput("measure value of " + elem_to_bitstring(members[i]) +
                               " is negative");
    std::size_t zero_idx = algebra->index_of(algebra->zero());
    if (values_by_member[zero_idx] != 0)
        throw InvalidInput("measure of the zero element must be 0");

    // Additivity for every incompatible pair is equivalent to each member's
    // value being the sum of its atom values; on failure, walking the atom
    // decomposition of a bad member yields a concrete violating pair.
    const auto& atoms = algebra->atoms();
    std::vector<Rat> atom_values(atoms.size());
    for (std::size_t i = 0; i < atoms.size(); ++i)
        atom_values[i] = values_by_member[algebra->index_of(atoms[i])];

    for (std::size_t i = 0; i < members.size(); ++i) {
        std::uint32_t bits = algebra->atom_bits_of(members[i]);
        Rat expected(0);
        for (std::size_t a = 0; a < atoms.size(); ++a)
            if (bits & (std::uint32_t(1) << a)) expected += atom_values[a];
        if (values_by_member[i] == expected) continue;

        // Find the first pair (prefix, rest) along the decomposition whose
        // additivity fails.
        AlgebraElement rest = members[i];
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            if (!(bits & (std::uint32_t(1) << a))) continue;
            AlgebraElement head = atoms[a];
            AlgebraElement tail = rest - head;
            Rat joined = values_by_member[algebra->index_of(rest)];
            Rat summed = values_by_member[algebra->index_of(head)] +
                         values_by_member[algebra->index_of(tail)];
            if (joined != summed) throw AdditivityError(head, tail, joined, summed);
            rest = tail;
        }
        // Unreachable: if every split is additive, the total matches.
        throw AdditivityError(algebra->zero(), members[i], values_by_member[i], expected);
    }

    if (values_by_member.back() <= 0)
        throw NonTrivialityError("trivial measure: value of the full set must be positive");
    return Fam(std::move(algebra), std::move(values_by_member));
}

Fam Fam::from_atom_values(AlgebraPtr algebra, const std::vector<Rat>& atom_values) {
    if (!algebra) throw InvalidInput("measure requires an algebra");
    if (atom_values.size() != algebra->atoms().size())
        throw InvalidInput("expected one value per atom");
    std::vector<Rat> values;
    values.reserve(algebra->size());
    for (const auto& m : algebra->members()) {
        std::uint32_t bits = algebra->atom_bits_of(m);
        Rat v(0);
        for (std::size_t a = 0; a < atom_values.size(); ++a)
            if (bits & (std::uint32_t(1) << a)) v += atom_values[a];
        values.push_back(std::move(v));
    }
    return validate(std::move(algebra), std::move(values));
}

const Rat& Fam::value(const AlgebraElement& m) const {
    return values_[algebra_->index_of(m)];
}

Fam Fam::scaled(const Rat& factor) const {
    if (factor <= 0) throw InvalidInput("scale factor must be positive");
    std::vector<Rat> values = values_;
    for (auto& v : values) v *= factor;
    return Fam(algebra_, std::move(values));
}

bool operator==(const Fam& a, const Fam& b) {
    return *a.algebra_ == *b.algebra_ && a.values_ == b.values_;
}

FamClass classify(const Fam& m) {
    FamClass c;
    c.finite = true;
    c.probability = (m.bound() == 1);
    c.strictly_positive = true;
    const auto& members = m.algebra().members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].any() && m.value_at_index(i) == 0) {
            c.strictly_positive = false;
            break;
        }
    }
    c.free = true;
    for (std::size_t p = 0; p < m.algebra().ground().size(); ++p) {
        AlgebraElement singleton(m.algebra().ground().size());
        singleton.set(p);
        if (!m.algebra().contains(singleton) || m.value(singleton) != 0) {
            c.free = false;
            break;
        }
    }
    return c;
}

Fam uniform_fam(const GroundSet& x, const AlgebraElement& support) {
    if (support.size() != x.size())
        throw InvalidInput("support mask size does not match the ground set");
    if (support.none()) throw InvalidInput("uniform measure requires a nonempty support");
    auto algebra = std::make_shared<FiniteAlgebra>(FiniteAlgebra::power_set(x));
    std::vector<Rat> values;
    values.reserve(algebra->size());
    const auto total = support.count();
    for (const auto& m : algebra->members())
        values.emplace_back(Int((m & support).count()), Int(total));
    return Fam::validate(std::move(algebra), std::move(values));
}

Fam conditional_fam(const Fam& m, const AlgebraElement& b) {
    const Rat& vb = m.value(b);
    if (vb == 0)
        throw DivisionByZero("conditional measure on an element of measure zero");
    std::vector<Rat> values;
    values.reserve(m.algebra().size());
    for (const auto& a : m.algebra().members()) values.push_back(m.value(a & b) / vb);
    return Fam::validate(m.algebra_ptr(), std::move(values));
}

Fam sigma_centered_fam(const std::vector<Filter>& ultrafilters,
                       const SigmaCenteredOptions& options) {
    if (ultrafilters.empty()) throw InvalidInput("need at least one ultrafilter");
    const AlgebraPtr& algebra = ultrafilters.front().algebra_ptr();
    for (const auto& f : ultrafilters) {
        if (f.algebra() != *algebra)
            throw InvalidInput("all filters must live on the same algebra");
        if (!f.is_ultra())
            throw InvalidInput("every filter in the list must be an ultrafilter");
    }
    const std::size_t n = ultrafilters.size();
    std::vector<Rat> values;
    values.reserve(algebra->size());
    for (const auto& b : algebra->members()) {
        Rat v(0);
        bool covered = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (ultrafilters[i].contains(b)) {
                v += Rat(Int(1), Int(1) << (i + 1));
                covered = true;
            }
        }
        if (!covered && b.any()) throw CoverageError(b);
        values.push_back(std::move(v));
    }
    Fam fam = Fam::validate(algebra, std::move(values));
    if (options.normalize) {
        Rat total = Rat(1) - Rat(Int(1), Int(1) << n);
        fam = fam.scaled(Rat(1) / total);
    }
    return fam;
}

Fam filter_to_fam(const Filter& f) {
    auto algebra = std::make_shared<FiniteAlgebra>(generated_by_filter(f));
    std::vector<Rat> values;
    values.reserve(algebra->size());
    for (const auto& m : algebra->members()) values.emplace_back(f.contains(m) ? 1 : 0);
    return Fam::validate(std::move(algebra), std::move(values));
}

Filter fam_to_filter(const Fam& m) {
    if (m.bound() != 1)
        throw InvalidInput("filter extraction requires a probability measure");
    std::vector<AlgebraElement> members;
    const auto& algebra_members = m.algebra().members();
    for (std::size_t i = 0; i < algebra_members.size(); ++i) {
        const Rat& v = m.value_at_index(i);
        if (v != 0 && v != 1)
            throw InvalidInput("filter extraction requires a two-valued measure; value(" +
                               elem_to_bitstring(algebra_members[i]) + ") = " + rat_to_string(v));
        if (v == 1) members.push_back(algebra_members[i]);
    }
    return Filter(m.algebra_ptr(), std::move(members));
}

Fam pushforward_fam(const Fam& m, const GroundMap& h) {
    PushforwardAlgebra push = preimage_hom(h, m.algebra());
    std::vector<Rat> values;
    values.reserve(push.algebra.size());
    for (const auto& pre : push.preimages) values.push_back(m.value(pre));
    return Fam::validate(std::make_shared<FiniteAlgebra>(std::move(push.algebra)),
                         std::move(values));
}

Fam restrict_fam(const Fam& m, const AlgebraElement& e) {
    if (!m.algebra().contains(e))
        throw InvalidInput("restriction requires a member of the algebra");
    if (m.value(e) == 0)
        throw NonTrivialityError("restriction to an element of measure zero is trivial");

    // New ground: the points of e, keeping their original order and ids.
    std::vector<std::string> ids;
    std::vector<std::size_t> positions;
    for (std::size_t p = 0; p < e.size(); ++p) {
        if (e.test(p)) {
            ids.push_back(m.algebra().ground().id(p));
            positions.push_back(p);
        }
    }
    GroundSet ground(std::move(ids));

    auto restrict_mask = [&](const AlgebraElement& b) {
        AlgebraElement r(positions.size());
        for (std::size_t i = 0; i < positions.size(); ++i)
            if (b.test(positions[i])) r.set(i);
        return r;
    };

    std::vector<AlgebraElement> members;
    for (const auto& b : m.algebra().members()) members.push_back(restrict_mask(b & e));
    FiniteAlgebra restricted = FiniteAlgebra::from_members(ground, std::move(members));

    auto unrestrict_mask = [&](const AlgebraElement& r) {
        AlgebraElement b(e.size());
        for (std::size_t i = 0; i < positions.size(); ++i)
            if (r.test(i)) b.set(positions[i]);
        return b;
    };
    std::vector<Rat> values;
    values.reserve(restricted.size());
    for (const auto& r : restricted.members()) values.push_back(m.value(unrestrict_mask(r)));
    return Fam::validate(std::make_shared<FiniteAlgebra>(std::move(restricted)),
                         std::move(values));
}

std::string sigma_additivity_gap_note() {
    return
        "Hypothetical construction (not materialized; free ultrafilters on an\n"
        "infinite set require the Axiom of Choice):\n"
        "  Let X = {x_0, x_1, ...} be countable and F a free ultrafilter on a\n"
        "  subalgebra of P(X) containing all singletons. The induced two-valued\n"
        "  measure m gives m({x_n}) = 0 for every n, because each co-singleton\n"
        "  is co-finite and hence in F. Yet m(X) = 1. Summing over the disjoint\n"
        "  singletons:\n"
        "      sum_n m({x_n}) = 0  <  1 = m(union_n {x_n}) = m(X),\n"
        "  so m is finitely additive but not countably additive.\n";
}

std::string fam_to_text(const Fam& m) {
    std::ostringstream os;
    os << algebra_to_text(m.algebra());
    const auto& members = m.algebra().members();
    for (std::size_t i = 0; i < members.size(); ++i)
        os << "value: " << elem_to_bitstring(members[i]) << " = "
           << rat_to_string(m.value_at_index(i)) << "\n";
    return os.str();
}

Fam fam_from_text(std::istream& in) {
    std::string line;
    std::optional<GroundSet> ground;
    std::vector<AlgebraElement> members;
    std::vector<std::pair<AlgebraElement, Rat>> value_lines;
    std::size_t lineno = 0;

    auto strip = [](std::string s) {
        s.erase(std::remove_if(s.begin(), s.end(),
                               [](char c) { return c == ' ' || c == '\t' || c == '\r'; }),
                s.end());
        return s;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw InvalidInput("line " + std::to_string(lineno) + ": expected 'key: ...'");
        std::string key = line.substr(0, colon);
        std::string rest = line.substr(colon + 1);
        if (key == "ground") {
            std::vector<std::string> ids;
            std::istringstream is(rest);
            std::string id;
            while (std::getline(is, id, ',')) {
                auto b = id.find_first_not_of(" \t");
                auto e = id.find_last_not_of(" \t\r");
                if (b == std::string::npos)
                    throw InvalidInput("line " + std::to_string(lineno) +
                                       ": empty ground identifier");
                ids.push_back(id.substr(b, e - b + 1));
            }
            ground.emplace(std::move(ids));
        } else if (key == "member") {
            if (!ground)
                throw InvalidInput("line " + std::to_string(lineno) + ": 'ground:' must come first");
            members.push_back(elem_from_bitstring(strip(rest)));
        } else if (key == "value") {
            if (!ground)
                throw InvalidInput("line " + std::to_string(lineno) + ": 'ground:' must come first");
            auto eq = rest.find('=');
            if (eq == std::string::npos)
                throw InvalidInput("line " + std::to_string(lineno) +
                                   ": expected 'value: bits = p/q'");
            AlgebraElement mask = elem_from_bitstring(strip(rest.substr(0, eq)));
            auto rat = rat_parse(rest.substr(eq + 1));
            if (!rat)
                throw InvalidInput("line " + std::to_string(lineno) + ": malformed rational");
            value_lines.emplace_back(std::move(mask), std::move(*rat));
        } else {
            throw InvalidInput("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!ground) throw InvalidInput("missing 'ground:' line");

    FiniteAlgebra algebra = FiniteAlgebra::from_members(*ground, std::move(members));
    std::vector<std::optional<Rat>> values(algebra.size());
    for (auto& [mask, v] : value_lines) {
        if (!algebra.contains(mask))
            throw InvalidInput("value line names " + elem_to_bitstring(mask) +
                               " which is not a member");
        values[algebra.index_of(mask)] = std::move(v);
    }
    std::vector<Rat> dense;
    dense.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i])
            throw InvalidInput("missing value for member " +
                               elem_to_bitstring(algebra.members()[i]));
        dense.push_back(std::move(*values[i]));
    }
    return Fam::validate(std::make_shared<FiniteAlgebra>(std::move(algebra)), std::move(dense));
}

}  // namespace famint
