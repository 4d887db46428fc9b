#include "famint/algebra.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace famint {

GroundSet::GroundSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
    if (ids_.empty()) throw InvalidInput("ground set must be nonempty");
    std::set<std::string> seen;
    for (const auto& id : ids_) {
        if (!seen.insert(id).second)
            throw InvalidInput("ground set identifiers must be distinct: duplicate '" + id + "'");
    }
}

GroundSet GroundSet::numbered(std::size_t n) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    return GroundSet(std::move(ids));
}

std::size_t GroundSet::index_of(const std::string& id) const {
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) throw InvalidInput("unknown ground element '" + id + "'");
    return static_cast<std::size_t>(it - ids_.begin());
}

AlgebraElement GroundSet::mask_of(std::initializer_list<std::size_t> points) const {
    AlgebraElement m(size());
    for (auto p : points) {
        if (p >= size()) throw InvalidInput("ground point index out of range");
        m.set(p);
    }
    return m;
}

namespace {

void require_same_size(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.size() != b.size())
        throw InvalidInput("algebra elements belong to different ground sets");
}

}  // namespace

AlgebraElement elem_meet(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_size(a, b);
    return a & b;
}

AlgebraElement elem_join(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_size(a, b);
    return a | b;
}

AlgebraElement elem_complement(const AlgebraElement& a) { return ~a; }

AlgebraElement elem_diff(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_size(a, b);
    return a - b;
}

bool elem_leq(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_size(a, b);
    return a.is_subset_of(b);
}

bool elem_incompatible(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_size(a, b);
    return (a & b).none();
}

std::string elem_to_bitstring(const AlgebraElement& a) {
    std::string s(a.size(), '0');
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.test(i)) s[i] = '1';
    return s;
}

AlgebraElement elem_from_bitstring(const std::string& bits) {
    AlgebraElement m(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            m.set(i);
        else if (bits[i] != '0')
            throw InvalidInput("bitstring may contain only '0' and '1'");
    }
    return m;
}

std::string elem_to_set_string(const AlgebraElement& a, const GroundSet& ground) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a.test(i)) continue;
        if (!first) s += ",";
        s += ground.id(i);
        first = false;
    }
    return s + "}";
}

FiniteAlgebra::FiniteAlgebra(GroundSet ground, std::vector<AlgebraElement> members,
                             std::vector<AlgebraElement> atoms)
    : ground_(std::move(ground)), members_(std::move(members)), atoms_(std::move(atoms)) {
    member_by_atom_bits_.assign(std::size_t(1) << atoms_.size(), 0);
    for (std::size_t i = 0; i < members_.size(); ++i)
        member_by_atom_bits_[atom_bits_of(members_[i])] = i;
}

namespace {

// Atoms of the generated subalgebra: points with equal generator-membership
// signatures form one atom.
std::vector<AlgebraElement> atoms_from_generators(const GroundSet& ground,
                                                  const std::vector<AlgebraElement>& generators) {
    std::map<std::vector<bool>, AlgebraElement> cells;
    for (std::size_t p = 0; p < ground.size(); ++p) {
        std::vector<bool> sig;
        sig.reserve(generators.size());
        for (const auto& g : generators) sig.push_back(g.test(p));
        auto [it, inserted] = cells.try_emplace(std::move(sig), ground.empty_mask());
        it->second.set(p);
    }
    std::vector<AlgebraElement> atoms;
    atoms.reserve(cells.size());
    for (auto& [sig, mask] : cells) atoms.push_back(std::move(mask));
    std::sort(atoms.begin(), atoms.end());
    return atoms;
}

std::vector<AlgebraElement> members_from_atoms(const GroundSet& ground,
                                               const std::vector<AlgebraElement>& atoms) {
    std::vector<AlgebraElement> members;
    members.reserve(std::size_t(1) << atoms.size());
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << atoms.size()); ++bits) {
        AlgebraElement m = ground.empty_mask();
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (bits & (std::uint64_t(1) << i)) m |= atoms[i];
        members.push_back(std::move(m));
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::generated(GroundSet ground,
                                       const std::vector<AlgebraElement>& generators,
                                       const AlgebraLimits& limits) {
    if (ground.size() > limits.max_ground)
        throw InvalidInput("ground set size " + std::to_string(ground.size()) +
                           " exceeds the configured cap of " + std::to_string(limits.max_ground));
    for (const auto& g : generators)
        if (g.size() != ground.size())
            throw InvalidInput("generator mask size does not match the ground set");
    auto atoms = atoms_from_generators(ground, generators);
    if (atoms.size() > limits.max_atoms)
        throw InvalidInput("generated algebra has " + std::to_string(atoms.size()) +
                           " atoms; member enumeration would exceed 2^" +
                           std::to_string(limits.max_atoms));
    auto members = members_from_atoms(ground, atoms);
    return FiniteAlgebra(std::move(ground), std::move(members), std::move(atoms));
}

FiniteAlgebra FiniteAlgebra::power_set(GroundSet ground, const AlgebraLimits& limits) {
    std::vector<AlgebraElement> singletons;
    for (std::size_t i = 0; i < ground.size(); ++i) {
        AlgebraElement s(ground.size());
        s.set(i);
        singletons.push_back(std::move(s));
    }
    return generated(std::move(ground), singletons, limits);
}

FiniteAlgebra FiniteAlgebra::from_members(GroundSet ground, std::vector<AlgebraElement> members) {
    for (const auto& m : members)
        if (m.size() != ground.size())
            throw InvalidInput("member mask size does not match the ground set");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    auto present = [&](const AlgebraElement& m) {
        return std::binary_search(members.begin(), members.end(), m);
    };
    auto missing = [&](const AlgebraElement& m, const std::string& how) -> void {
        throw InvalidInput("member set is not closed: missing " + how + " " +
                           elem_to_bitstring(m));
    };
    if (!present(ground.empty_mask())) missing(ground.empty_mask(), "empty set");
    if (!present(ground.full_mask())) missing(ground.full_mask(), "full set");
    for (const auto& a : members) {
        AlgebraElement c = ~a;
        if (!present(c)) missing(c, "complement of " + elem_to_bitstring(a) + ",");
        for (const auto& b : members) {
            AlgebraElement m = a & b;
            if (!present(m)) missing(m, "intersection");
            AlgebraElement j = a | b;
            if (!present(j)) missing(j, "union");
        }
    }

    // Atoms: minimal nonzero members.
    std::vector<AlgebraElement> atoms;
    for (const auto& m : members) {
        if (m.none()) continue;
        bool minimal = true;
        for (const auto& other : members) {
            if (other.none() || other == m) continue;
            if (other.is_subset_of(m)) {
                minimal = false;
                break;
            }
        }
        if (minimal) atoms.push_back(m);
    }
    return FiniteAlgebra(std::move(ground), std::move(members), std::move(atoms));
}

bool FiniteAlgebra::contains(const AlgebraElement& m) const {
    return m.size() == ground_.size() &&
           std::binary_search(members_.begin(), members_.end(), m);
}

std::size_t FiniteAlgebra::index_of(const AlgebraElement& m) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), m);
    if (it == members_.end() || *it != m)
        throw InvalidInput("element " + elem_to_bitstring(m) + " is not in the algebra");
    return static_cast<std::size_t>(it - members_.begin());
}

std::uint32_t FiniteAlgebra::atom_bits_of(const AlgebraElement& member) const {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i].is_subset_of(member)) bits |= (std::uint32_t(1) << i);
    return bits;
}

const AlgebraElement& FiniteAlgebra::member_from_atom_bits(std::uint32_t atom_bits) const {
    return members_[member_by_atom_bits_.at(atom_bits)];
}

std::size_t FiniteAlgebra::member_index_from_atom_bits(std::uint32_t atom_bits) const {
    return member_by_atom_bits_.at(atom_bits);
}

namespace {

void require_subset_of_algebra(const std::vector<AlgebraElement>& f,
                               const FiniteAlgebra& algebra) {
    for (const auto& m : f)
        if (!algebra.contains(m))
            throw InvalidInput("set contains " +
                               (m.size() == algebra.ground().size() ? elem_to_bitstring(m)
                                                                    : std::string("a mask")) +
                               " which is outside the algebra");
}

}  // namespace

bool is_filter(const std::vector<AlgebraElement>& f, const FiniteAlgebra& algebra) {
    require_subset_of_algebra(f, algebra);
    if (f.empty()) return false;
    std::set<AlgebraElement> fs(f.begin(), f.end());
    for (const auto& m : fs)
        if (m.none()) return false;  // 0 not in F
    for (const auto& a : fs)
        for (const auto& b : fs)
            if (!fs.count(a & b)) return false;  // closed under meet
    for (const auto& a : fs)
        for (const auto& m : algebra.members())
            if (a.is_subset_of(m) && !fs.count(m)) return false;  // upward closed
    return true;
}

bool is_ideal(const std::vector<AlgebraElement>& f, const FiniteAlgebra& algebra) {
    require_subset_of_algebra(f, algebra);
    if (f.empty()) return false;
    std::set<AlgebraElement> fs(f.begin(), f.end());
    for (const auto& m : fs)
        if (m.all()) return false;  // 1 not in I
    for (const auto& a : fs)
        for (const auto& b : fs)
            if (!fs.count(a | b)) return false;  // closed under join
    for (const auto& a : fs)
        for (const auto& m : algebra.members())
            if (m.is_subset_of(a) && !fs.count(m)) return false;  // downward closed
    return true;
}

bool is_ultrafilter(const std::vector<AlgebraElement>& f, const FiniteAlgebra& algebra) {
    if (!is_filter(f, algebra)) return false;
    std::set<AlgebraElement> fs(f.begin(), f.end());
    for (const auto& m : algebra.members())
        if (!fs.count(m) && !fs.count(~m)) return false;
    return true;
}

Filter::Filter(AlgebraPtr algebra, std::vector<AlgebraElement> members)
    : algebra_(std::move(algebra)), members_(std::move(members)) {
    if (!algebra_) throw InvalidInput("filter requires an algebra");
    if (!is_filter(members_, *algebra_))
        throw InvalidInput("the given set is not a filter on the algebra");
    std::sort(members_.begin(), members_.end());
}

Filter Filter::principal(AlgebraPtr algebra, const AlgebraElement& base) {
    if (!algebra) throw InvalidInput("filter requires an algebra");
    if (base.none()) throw InvalidInput("a filter cannot be generated by the zero element");
    if (!algebra->contains(base))
        throw InvalidInput("filter base is not a member of the algebra");
    std::vector<AlgebraElement> ms;
    for (const auto& m : algebra->members())
        if (base.is_subset_of(m)) ms.push_back(m);
    return Filter(std::move(algebra), std::move(ms));
}

bool Filter::contains(const AlgebraElement& m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

bool Filter::is_ultra() const { return is_ultrafilter(members_, *algebra_); }

bool operator==(const Filter& a, const Filter& b) {
    return *a.algebra_ == *b.algebra_ && a.members_ == b.members_;
}

std::vector<AlgebraElement> negation_dual(const std::vector<AlgebraElement>& f) {
    std::vector<AlgebraElement> dual;
    dual.reserve(f.size());
    for (const auto& m : f) dual.push_back(~m);
    std::sort(dual.begin(), dual.end());
    return dual;
}

FiniteAlgebra generated_by_filter(const Filter& f) {
    return FiniteAlgebra::generated(f.algebra().ground(), f.members());
}

std::vector<Filter> enumerate_ultrafilters(const AlgebraPtr& algebra) {
    std::vector<Filter> out;
    out.reserve(algebra->atoms().size());
    for (const auto& atom : algebra->atoms()) out.push_back(Filter::principal(algebra, atom));
    return out;
}

std::vector<AlgebraElement> upward_closure(const std::vector<AlgebraElement>& f,
                                           const FiniteAlgebra& super) {
    std::vector<AlgebraElement> out;
    for (const auto& b : super.members()) {
        for (const auto& c : f) {
            if (c.size() != b.size())
                throw InvalidInput("upward closure: masks live on different ground sets");
            if (c.is_subset_of(b)) {
                out.push_back(b);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

GroundMap::GroundMap(GroundSet dom, GroundSet cod, std::vector<std::size_t> img)
    : domain(std::move(dom)), codomain(std::move(cod)), image(std::move(img)) {
    if (image.size() != domain.size())
        throw InvalidInput("ground map must be total on its domain");
    for (auto y : image)
        if (y >= codomain.size()) throw InvalidInput("ground map image index out of range");
}

AlgebraElement GroundMap::preimage(const AlgebraElement& target_subset) const {
    if (target_subset.size() != codomain.size())
        throw InvalidInput("preimage: mask size does not match the codomain");
    AlgebraElement m(domain.size());
    for (std::size_t x = 0; x < domain.size(); ++x)
        if (target_subset.test(image[x])) m.set(x);
    return m;
}

AlgebraElement GroundMap::forward(const AlgebraElement& domain_subset) const {
    if (domain_subset.size() != domain.size())
        throw InvalidInput("forward image: mask size does not match the domain");
    AlgebraElement m(codomain.size());
    for (std::size_t x = 0; x < domain.size(); ++x)
        if (domain_subset.test(x)) m.set(image[x]);
    return m;
}

bool GroundMap::injective() const {
    std::set<std::size_t> seen;
    for (auto y : image)
        if (!seen.insert(y).second) return false;
    return true;
}

PushforwardAlgebra preimage_hom(const GroundMap& h, const FiniteAlgebra& source,
                                const AlgebraLimits& limits) {
    if (source.ground() != h.domain)
        throw InvalidInput("preimage_hom: source algebra does not live on the map's domain");
    if (h.codomain.size() > limits.max_ground)
        throw InvalidInput("preimage_hom: codomain exceeds the configured ground cap");

    std::vector<AlgebraElement> members;
    std::vector<AlgebraElement> preimages;
    const std::size_t ny = h.codomain.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << ny); ++bits) {
        AlgebraElement a(ny);
        for (std::size_t i = 0; i < ny; ++i)
            if (bits & (std::uint64_t(1) << i)) a.set(i);
        AlgebraElement pre = h.preimage(a);
        if (source.contains(pre)) members.push_back(std::move(a));
    }
    FiniteAlgebra target = FiniteAlgebra::from_members(h.codomain, std::move(members));
    preimages.reserve(target.size());
    for (const auto& a : target.members()) preimages.push_back(h.preimage(a));
    return PushforwardAlgebra{std::move(target), std::move(preimages)};
}

std::string algebra_to_text(const FiniteAlgebra& algebra) {
    std::ostringstream os;
    os << "ground: ";
    for (std::size_t i = 0; i < algebra.ground().size(); ++i) {
        if (i) os << ",";
        os << algebra.ground().id(i);
    }
    os << "\n";
    for (const auto& m : algebra.members()) os << "member: " << elem_to_bitstring(m) << "\n";
    return os.str();
}

namespace {

GroundSet parse_ground_line(const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos || line.substr(0, colon) != "ground")
        throw InvalidInput("expected 'ground: id,id,...' as the first line");
    std::vector<std::string> ids;
    std::string rest = line.substr(colon + 1);
    std::istringstream is(rest);
    std::string id;
    while (std::getline(is, id, ',')) {
        // trim spaces
        auto b = id.find_first_not_of(" \t");
        auto e = id.find_last_not_of(" \t");
        if (b == std::string::npos) throw InvalidInput("empty ground identifier");
        ids.push_back(id.substr(b, e - b + 1));
    }
    return GroundSet(std::move(ids));
}

}  // namespace

FiniteAlgebra algebra_from_text(std::istream& in) {
    std::string line;
    std::optional<GroundSet> ground;
    std::vector<AlgebraElement> members;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!ground) {
            ground = parse_ground_line(line);
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw InvalidInput("line " + std::to_string(lineno) + ": expected 'member: bits'");
        std::string key = line.substr(0, colon);
        if (key != "member")
            throw InvalidInput("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        std::string bits = line.substr(colon + 1);
        bits.erase(std::remove_if(bits.begin(), bits.end(),
                                  [](char c) { return c == ' ' || c == '\t' || c == '\r'; }),
                   bits.end());
        AlgebraElement m = elem_from_bitstring(bits);
        if (m.size() != ground->size())
            throw InvalidInput("line " + std::to_string(lineno) +
                               ": bitstring length does not match the ground set");
        members.push_back(std::move(m));
    }
    if (!ground) throw InvalidInput("missing 'ground:' line");
    return FiniteAlgebra::from_members(std::move(*ground), std::move(members));
}

std::string filter_to_text(const Filter& f) {
    std::ostringstream os;
    os << "ground: ";
    for (std::size_t i = 0; i < f.algebra().ground().size(); ++i) {
        if (i) os << ",";
        os << f.algebra().ground().id(i);
    }
    os << "\n";
    for (const auto& m : f.members()) os << "member: " << elem_to_bitstring(m) << "\n";
    return os.str();
}

Filter filter_from_text(std::istream& in, AlgebraPtr algebra) {
    std::string line;
    std::optional<GroundSet> ground;
    std::vector<AlgebraElement> members;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!ground) {
            ground = parse_ground_line(line);
            if (*ground != algebra->ground())
                throw InvalidInput("filter ground set does not match the algebra");
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) throw InvalidInput("expected 'member: bits'");
        std::string bits = line.substr(colon + 1);
        bits.erase(std::remove_if(bits.begin(), bits.end(),
                                  [](char c) { return c == ' ' || c == '\t' || c == '\r'; }),
                   bits.end());
        members.push_back(elem_from_bitstring(bits));
    }
    return Filter(std::move(algebra), std::move(members));
}

}  // namespace famint
