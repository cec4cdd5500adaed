#include "dw/group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace dw {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FiniteGroup FiniteGroup::from_table(std::string name, int order,
                                    const std::vector<int>& table,
                                    std::vector<std::string> labels) {
    if (order < 1) throw Error("group order must be positive");
    if (order > max_order)
        throw Error("group order " + std::to_string(order) + " exceeds the table cap of " +
                    std::to_string(max_order));
    if ((int)table.size() != order * order) throw Error("multiplication table has wrong size");
    FiniteGroup G;
    G.name_ = std::move(name);
    G.order_ = order;
    G.mul_.assign(table.begin(), table.end());
    for (int v : table)
        if (v < 0 || v >= order) throw Error("table entry out of range in group " + G.name_);
    // identity at index 0
    for (Elt g = 0; g < order; ++g)
        if (G.mul(0, g) != g || G.mul(g, 0) != g)
            throw Error("index 0 is not an identity in group " + G.name_);
    // rows and columns are permutations
    std::vector<char> seen(order);
    for (Elt g = 0; g < order; ++g) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Elt h = 0; h < order; ++h) seen[G.mul(g, h)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw Error("row " + std::to_string(g) + " of the table is not a permutation");
        std::fill(seen.begin(), seen.end(), 0);
        for (Elt h = 0; h < order; ++h) seen[G.mul(h, g)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw Error("column " + std::to_string(g) + " of the table is not a permutation");
    }
    // inverses
    G.inv_.assign(order, 0);
    for (Elt g = 0; g < order; ++g) {
        bool found = false;
        for (Elt h = 0; h < order; ++h)
            if (G.mul(g, h) == 0 && G.mul(h, g) == 0) {
                G.inv_[g] = uint16_t(h);
                found = true;
                break;
            }
        if (!found) throw Error("element " + std::to_string(g) + " has no two-sided inverse");
    }
    // associativity: exhaustive up to order 200, random triples above
    if (order <= 200) {
        for (Elt a = 0; a < order; ++a)
            for (Elt b = 0; b < order; ++b)
                for (Elt c = 0; c < order; ++c)
                    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
                        throw Error("table is not associative");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, order - 1);
        for (int t = 0; t < 20000; ++t) {
            Elt a = pick(rng), b = pick(rng), c = pick(rng);
            if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
                throw Error("table is not associative");
        }
    }
    if (labels.empty()) {
        labels.resize(order);
        for (int i = 0; i < order; ++i) labels[i] = std::to_string(i);
        labels[0] = "e";
    }
    if ((int)labels.size() != order) throw Error("label list has wrong size");
    G.labels_ = std::move(labels);
    return G;
}

Elt FiniteGroup::power(Elt a, long long k) const {
    Elt base = a;
    if (k < 0) {
        base = inv(a);
        k = -k;
    }
    Elt r = id;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

int FiniteGroup::element_order(Elt a) const {
    Elt x = a;
    int n = 1;
    while (x != id) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

std::optional<Elt> FiniteGroup::element_by_label(const std::string& s) const {
    for (Elt g = 0; g < order_; ++g)
        if (labels_[g] == s) return g;
    if (s == "e" || s == "()" || s == "1")
        return id;  // common spellings of the identity
    return std::nullopt;
}

std::optional<Elt> FiniteGroup::element_by_matrix(const std::vector<int>& m) const {
    for (Elt g = 0; g < order_; ++g)
        if (mats_[g] == m) return g;
    return std::nullopt;
}

void FiniteGroup::attach_matrix_view(int d, int p, std::vector<std::vector<int>> mats) {
    if ((int)mats.size() != order_) throw Error("matrix view size mismatch");
    mat_dim_ = d;
    mat_mod_ = p;
    mats_ = std::move(mats);
}

namespace {

FiniteGroup cyclic_group(int n) {
    std::vector<int> tab(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) tab[size_t(a) * n + b] = (a + b) % n;
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return FiniteGroup::from_table("Z:" + std::to_string(n), n, tab, labels);
}

FiniteGroup symmetric_group(int n) {
    if (n < 1) throw Error("S:n needs n >= 1");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int order = (int)perms.size();
    if (order > FiniteGroup::max_order) throw Error("S:" + std::to_string(n) + " exceeds the table cap");
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < order; ++i) index[perms[i]] = i;
    std::vector<int> tab(size_t(order) * order);
    std::vector<int> c(n);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            tab[size_t(a) * order + b] = index[c];
        }
    // cycle-notation labels, "e" for the identity
    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i) {
        const auto& q = perms[i];
        std::string s;
        std::vector<char> done(n, 0);
        for (int st = 0; st < n; ++st) {
            if (done[st] || q[st] == st) continue;
            s += '(';
            int x = st;
            while (!done[x]) {
                done[x] = 1;
                s += std::to_string(x + 1);
                x = q[x];
            }
            s += ')';
        }
        labels[i] = s.empty() ? "e" : s;
    }
    return FiniteGroup::from_table("S:" + std::to_string(n), order, tab, labels);
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw Error("D:n needs n >= 1");
    int order = 2 * n;
    // element 2k = r^k, 2k+1 = s r^k
    auto enc = [&](int flip, int rot) { return 2 * ((rot % n + n) % n) + flip; };
    std::vector<int> tab(size_t(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            int fa = a & 1, ra = a >> 1, fb = b & 1, rb = b >> 1;
            // (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^(rb + (fb ? -ra : ra))
            int f = fa ^ fb;
            int r = fb ? (rb - ra) : (rb + ra);
            tab[size_t(a) * order + b] = enc(f, r);
        }
    std::vector<std::string> labels(order);
    for (int k = 0; k < n; ++k) {
        labels[2 * k] = "r" + std::to_string(k);
        labels[2 * k + 1] = "sr" + std::to_string(k);
    }
    return FiniteGroup::from_table("D:" + std::to_string(n), order, tab, labels);
}

FiniteGroup quaternion_group() {
    // 0..7 = 1,-1,i,-i,j,-j,k,-k ; element g = 2*basis + (sign<0)
    auto mulq = [](int a, int b) {
        int sa = (a & 1) ? -1 : 1, ba = a >> 1;
        int sb = (b & 1) ? -1 : 1, bb = b >> 1;
        static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        int s = sa * sb * sign[ba][bb];
        return 2 * basis[ba][bb] + (s < 0 ? 1 : 0);
    };
    std::vector<int> tab(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) tab[a * 8 + b] = mulq(a, b);
    return FiniteGroup::from_table("Q8", 8, tab,
                                   {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

int det_mod(const std::vector<int>& m, int d, int p) {
    if (d == 2) return ((m[0] * m[3] - m[1] * m[2]) % p + p) % p;
    long long det = (long long)m[0] * (m[4] * m[8] - m[5] * m[7]) -
                    (long long)m[1] * (m[3] * m[8] - m[5] * m[6]) +
                    (long long)m[2] * (m[3] * m[7] - m[4] * m[6]);
    return int((det % p + p) % p);
}

std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b, int d, int p) {
    std::vector<int> c(d * d, 0);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            int aik = a[i * d + k];
            if (!aik) continue;
            for (int j = 0; j < d; ++j) c[i * d + j] = (c[i * d + j] + aik * b[k * d + j]) % p;
        }
    return c;
}

FiniteGroup special_linear_group(int d, int p) {
    if (!is_prime(p)) throw Error("SL" + std::to_string(d) + ":p needs p prime, got " + std::to_string(p));
    if (d == 3 && p > 3)
        throw Error("SL3:p is supported for p in {2,3} only (table budget)");
    // enumerate det-1 matrices, identity first, then row-major lexicographic
    std::vector<std::vector<int>> mats;
    std::vector<int> m(d * d, 0);
    long long total = 1;
    for (int i = 0; i < d * d; ++i) total *= p;
    auto pack = [&](const std::vector<int>& mm) {
        long long c = 0;
        for (int i = 0; i < d * d; ++i) c = c * p + mm[i];
        return c;
    };
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = d * d - 1; i >= 0; --i) {
            m[i] = int(c % p);
            c /= p;
        }
        if (det_mod(m, d, p) == 1) mats.push_back(m);
    }
    std::vector<int> idmat(d * d, 0);
    for (int i = 0; i < d; ++i) idmat[i * d + i] = 1;
    auto it = std::find(mats.begin(), mats.end(), idmat);
    std::rotate(mats.begin(), it, it + 1);  // identity to the front, rest keeps lex order
    int order = (int)mats.size();
    if (order > FiniteGroup::max_order)
        throw Error("SL" + std::to_string(d) + ":" + std::to_string(p) + " exceeds the table cap");
    std::vector<int> index(size_t(total), -1);
    for (int i = 0; i < order; ++i) index[pack(mats[i])] = i;
    std::vector<int> tab(size_t(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            tab[size_t(a) * order + b] = index[pack(mat_mul(mats[a], mats[b], d, p))];
    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i) {
        std::string s;
        for (int k = 0; k < d * d; ++k) {
            if (p >= 10 && k) s += '.';
            s += std::to_string(mats[i][k]);
        }
        labels[i] = s;
    }
    auto G = FiniteGroup::from_table("SL" + std::to_string(d) + ":" + std::to_string(p),
                                     order, tab, labels);
    G.attach_matrix_view(d, p, std::move(mats));
    return G;
}

FiniteGroup product_group(const FiniteGroup& A, const FiniteGroup& B) {
    long long order = (long long)A.order() * B.order();
    if (order > FiniteGroup::max_order) throw Error("product group exceeds the table cap");
    int n = (int)order, nb = B.order();
    std::vector<int> tab(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ia = a / nb, ja = a % nb, ib = b / nb, jb = b % nb;
            tab[size_t(a) * n + b] = A.mul(ia, ib) * nb + B.mul(ja, jb);
        }
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a)
        labels[a] = "(" + A.label(a / nb) + "," + B.label(a % nb) + ")";
    return FiniteGroup::from_table("prod(" + A.name() + "," + B.name() + ")", n, tab, labels);
}

FiniteGroup group_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group table file: " + path);
    int n;
    if (!(in >> n)) throw Error("group table file: missing order on first line");
    if (n < 1 || n > FiniteGroup::max_order) throw Error("group table file: bad order");
    std::vector<int> tab(size_t(n) * n);
    for (auto& v : tab)
        if (!(in >> v)) throw Error("group table file: truncated table");
    return FiniteGroup::from_table("table:" + path, n, tab);
}

int parse_positive(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size() || v < 1) throw Error("");
        return v;
    } catch (...) {
        throw Error("malformed " + what + ": '" + s + "'");
    }
}

}  // namespace

FiniteGroup make_group(const std::string& spec) {
    if (spec == "Q8") return quaternion_group();
    if (spec.rfind("prod(", 0) == 0) {
        if (spec.back() != ')') throw Error("malformed group spec: " + spec);
        std::string inner = spec.substr(5, spec.size() - 6);
        // split at the top-level comma
        int depth = 0;
        size_t cut = std::string::npos;
        for (size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            else if (inner[i] == ')') --depth;
            else if (inner[i] == ',' && depth == 0) {
                cut = i;
                break;
            }
        }
        if (cut == std::string::npos) throw Error("malformed group spec: " + spec);
        return product_group(make_group(inner.substr(0, cut)), make_group(inner.substr(cut + 1)));
    }
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error("malformed group spec: " + spec);
    std::string head = spec.substr(0, colon), arg = spec.substr(colon + 1);
    if (head == "table") return group_from_file(arg);
    if (head == "Z") return cyclic_group(parse_positive(arg, "group spec"));
    if (head == "S") return symmetric_group(parse_positive(arg, "group spec"));
    if (head == "D") return dihedral_group(parse_positive(arg, "group spec"));
    if (head == "SL2") return special_linear_group(2, parse_positive(arg, "group spec"));
    if (head == "SL3") return special_linear_group(3, parse_positive(arg, "group spec"));
    throw Error("unknown group spec: " + spec);
}

ConjugacyClassTable conjugacy_classes(const FiniteGroup& G) {
    int n = G.order();
    ConjugacyClassTable T;
    T.class_of.assign(n, -1);
    for (Elt x = 0; x < n; ++x) {
        if (T.class_of[x] >= 0) continue;
        int ci = (int)T.classes.size();
        std::vector<Elt> members;
        for (Elt g = 0; g < n; ++g) {
            Elt y = G.conj(g, x);
            if (T.class_of[y] < 0) {
                T.class_of[y] = ci;
                members.push_back(y);
            }
        }
        std::sort(members.begin(), members.end());
        T.rep.push_back(members.front());  // x itself is minimal: smaller ones already assigned
        T.classes.push_back(std::move(members));
    }
    return T;
}

std::vector<Elt> centralizer(const FiniteGroup& G, const std::vector<Elt>& S) {
    std::vector<Elt> out;
    for (Elt g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (Elt s : S)
            if (G.mul(g, s) != G.mul(s, g)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return out;
}

Subgroup subgroup_as_group(const FiniteGroup& G, const std::vector<Elt>& elements,
                           const std::string& name) {
    std::vector<Elt> elems = elements;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty() || elems.front() != FiniteGroup::id)
        throw Error("subgroup must contain the identity");
    std::vector<int> pos(G.order(), -1);
    for (int i = 0; i < (int)elems.size(); ++i) pos[elems[i]] = i;
    int n = (int)elems.size();
    std::vector<int> tab(size_t(n) * n);
    for (int a = 0; a < n; ++a) {
        if (pos[G.inv(elems[a])] < 0) throw Error("set not closed under inverses");
        for (int b = 0; b < n; ++b) {
            Elt prod = G.mul(elems[a], elems[b]);
            if (pos[prod] < 0) throw Error("set not closed under multiplication");
            tab[size_t(a) * n + b] = pos[prod];
        }
    }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = G.label(elems[i]);
    std::string nm = name.empty() ? "sub(" + G.name() + "," + std::to_string(n) + ")" : name;
    Subgroup S;
    S.group = FiniteGroup::from_table(nm, n, tab, labels);
    S.embed = std::move(elems);
    return S;
}

}  // namespace dw
