#include "innerlab/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace innerlab {

namespace {

void dump_canonical(const Json& v, std::string& out) {
    switch (v.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += Json(it.key()).dump();
                out += ':';
                dump_canonical(it.value(), out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ',';
                dump_canonical(v[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
            out += buf;
            break;
        }
        default:
            out += v.dump();
    }
}

}  // namespace

std::string canonical_json(const Json& value) {
    std::string out;
    dump_canonical(value, out);
    return out;
}

Json to_json(const Moebius& m) {
    return Json{{"a_re", m.a.real()}, {"a_im", m.a.imag()}, {"rotation", m.rotation}};
}

Moebius moebius_from_json(const Json& j) {
    return Moebius(Complex(j.at("a_re").get<double>(), j.at("a_im").get<double>()),
                   j.at("rotation").get<double>());
}

Json to_json(const BlaschkeProduct& b) {
    Json zeros = Json::array();
    for (const auto& z : b.zeros)
        zeros.push_back(
            Json{{"re", z.point.real()}, {"im", z.point.imag()}, {"mult", z.multiplicity}});
    return Json{{"zeros", zeros}, {"rotation", b.rotation}};
}

BlaschkeProduct blaschke_from_json(const Json& j) {
    std::vector<BlaschkeProduct::Zero> zeros;
    for (const auto& z : j.at("zeros"))
        zeros.push_back({Complex(z.at("re").get<double>(), z.at("im").get<double>()),
                         z.at("mult").get<int>()});
    return BlaschkeProduct(zeros, j.value("rotation", 0.0));
}

Json to_json(const InnerFunctionRep& f) {
    Json j;
    j["zeros"] = Json::array();
    j["rotation"] = 0.0;
    if (f.blaschke) {
        Json b = to_json(*f.blaschke);
        j["zeros"] = b["zeros"];
        j["rotation"] = b["rotation"];
    }
    j["singular_atoms"] = Json::array();
    if (f.singular)
        for (const auto& a : f.singular->atoms)
            j["singular_atoms"].push_back(Json{{"theta", a.theta}, {"mass", a.mass}});
    j["post"] = to_json(f.post);
    return j;
}

InnerFunctionRep inner_rep_from_json(const Json& j) {
    std::optional<BlaschkeProduct> b;
    if (j.contains("zeros") && !j.at("zeros").empty()) b = blaschke_from_json(j);
    std::optional<SingularAtomicInner> s;
    if (j.contains("singular_atoms") && !j.at("singular_atoms").empty()) {
        std::vector<SingularAtomicInner::Atom> atoms;
        for (const auto& a : j.at("singular_atoms"))
            atoms.push_back({a.at("theta").get<double>(), a.at("mass").get<double>()});
        s = SingularAtomicInner(std::move(atoms));
    }
    Moebius post = j.contains("post") ? moebius_from_json(j.at("post")) : Moebius();
    return InnerFunctionRep(std::move(b), std::move(s), post);
}

Json to_json(const CircleMeasure& mu) {
    Json atoms = Json::array();
    for (const auto& a : mu.atoms) atoms.push_back(Json{{"theta", a.theta}, {"mass", a.mass}});
    Json j{{"atoms", atoms}};
    j["density"] = Json{{"cells", mu.density.size()}, {"values", mu.density}};
    return j;
}

CircleMeasure circle_measure_from_json(const Json& j) {
    std::vector<CircleMeasure::Atom> atoms;
    for (const auto& a : j.at("atoms"))
        atoms.push_back({a.at("theta").get<double>(), a.at("mass").get<double>()});
    std::vector<double> density;
    if (j.contains("density")) {
        density = j.at("density").at("values").get<std::vector<double>>();
        if (density.size() != j.at("density").at("cells").get<std::size_t>())
            throw std::invalid_argument("circle_measure_from_json: cell count mismatch");
    }
    return CircleMeasure(std::move(atoms), std::move(density));
}

Json to_json(const DiskMeasure& mu) {
    Json atoms = Json::array();
    for (const auto& a : mu.atoms)
        atoms.push_back(Json{{"re", a.point.real()}, {"im", a.point.imag()}, {"mass", a.mass}});
    return Json{{"atoms", atoms}};
}

DiskMeasure disk_measure_from_json(const Json& j) {
    std::vector<DiskMeasure::Atom> atoms;
    for (const auto& a : j.at("atoms"))
        atoms.push_back({Complex(a.at("re").get<double>(), a.at("im").get<double>()),
                         a.at("mass").get<double>()});
    return DiskMeasure(std::move(atoms));
}

Json to_json(const BeurlingCarlesonSet& e) {
    Json arcs = Json::array();
    for (const auto& arc : e.complement_arcs) arcs.push_back(Json::array({arc.start, arc.end}));
    return Json{{"complement_arcs", arcs}};
}

BeurlingCarlesonSet bc_set_from_json(const Json& j) {
    std::vector<BeurlingCarlesonSet::Arc> arcs;
    for (const auto& arc : j.at("complement_arcs"))
        arcs.push_back({arc.at(0).get<double>(), arc.at(1).get<double>()});
    return BeurlingCarlesonSet(std::move(arcs));
}

Json to_json(const PolylineJordanDomain& omega) {
    Json verts = Json::array();
    for (const Complex& v : omega.vertices) verts.push_back(Json::array({v.real(), v.imag()}));
    Json arcs = Json::array();
    for (const auto& [first, last] : omega.circle_arcs) arcs.push_back(Json::array({first, last}));
    return Json{{"vertices", verts},
                {"circle_arcs", arcs},
                {"contained_in_disk", omega.contained_in_disk}};
}

PolylineJordanDomain domain_from_json(const Json& j) {
    std::vector<Complex> verts;
    for (const auto& v : j.at("vertices"))
        verts.push_back(Complex(v.at(0).get<double>(), v.at(1).get<double>()));
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    if (j.contains("circle_arcs"))
        for (const auto& a : j.at("circle_arcs"))
            arcs.push_back({a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>()});
    return PolylineJordanDomain(std::move(verts), j.value("contained_in_disk", false),
                                std::move(arcs));
}

Json to_json(const BoundaryPartition& parts) {
    Json out = Json::array();
    for (const auto& part : parts.parts) {
        Json ranges = Json::array();
        for (const auto& [first, last] : part.segment_ranges)
            ranges.push_back(Json::array({first, last}));
        out.push_back(Json{{"name", part.name}, {"segments", ranges}});
    }
    return Json{{"parts", out}};
}

BoundaryPartition partition_from_json(const Json& j) {
    BoundaryPartition parts;
    for (const auto& part : j.at("parts")) {
        BoundaryPartition::Part p;
        p.name = part.at("name").get<std::string>();
        for (const auto& r : part.at("segments"))
            p.segment_ranges.push_back({r.at(0).get<std::size_t>(), r.at(1).get<std::size_t>()});
        parts.parts.push_back(std::move(p));
    }
    return parts;
}

std::string strip_domain_to_csv(const StripGraphDomain& u) {
    std::ostringstream out;
    out << "x,h1,h2\n";
    char buf[96];
    for (std::size_t i = 0; i < u.h1.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", u.h1.x_at(i), u.h1.values[i],
                      u.h2.values[i]);
        out << buf;
    }
    return out.str();
}

StripGraphDomain strip_domain_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<double> xs, h1, h2;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == 'x' || line.front() == '#') continue;
        double x, a, b;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &a, &b) != 3)
            throw std::invalid_argument("strip_domain_from_csv: bad row: " + line);
        xs.push_back(x);
        h1.push_back(a);
        h2.push_back(b);
    }
    if (xs.size() < 2) throw std::invalid_argument("strip_domain_from_csv: need >= 2 rows");
    return StripGraphDomain(SampledFunction(xs.front(), xs.back(), h1),
                            SampledFunction(xs.front(), xs.back(), h2));
}

std::string mask_to_pgm(const GridDomain& g) {
    std::ostringstream out;
    out << "P2\n" << g.cols << " " << g.rows << "\n255\n";
    for (std::size_t j = 0; j < g.rows; ++j) {
        for (std::size_t i = 0; i < g.cols; ++i)
            out << (g.inside(i, j) ? 255 : 0) << (i + 1 < g.cols ? " " : "");
        out << "\n";
    }
    return out.str();
}

GridDomain grid_from_pgm_and_marking(const std::string& pgm, const Json& marking) {
    std::istringstream in(pgm);
    std::string magic;
    in >> magic;
    if (magic != "P2") throw std::invalid_argument("grid_from_pgm: expected ASCII P2 PGM");
    std::size_t cols, rows;
    int maxval;
    in >> cols >> rows >> maxval;
    GridDomain g;
    g.cols = cols;
    g.rows = rows;
    g.delta = marking.at("delta").get<double>();
    g.mask.assign(cols * rows, 0);
    g.side.assign(cols * rows, GridDomain::Side::None);
    for (std::size_t k = 0; k < cols * rows; ++k) {
        int v;
        if (!(in >> v)) throw std::invalid_argument("grid_from_pgm: truncated data");
        g.mask[k] = v > maxval / 2 ? 1 : 0;
    }
    auto apply = [&](const char* key, GridDomain::Side side) {
        if (!marking.contains(key)) return;
        for (const auto& ij : marking.at(key)) {
            std::size_t i = ij.at(0).get<std::size_t>(), j = ij.at(1).get<std::size_t>();
            if (i >= g.cols || j >= g.rows)
                throw std::invalid_argument("grid marking out of range");
            g.side[g.at(i, j)] = side;
        }
    };
    apply("side_a", GridDomain::Side::A);
    apply("side_b", GridDomain::Side::B);
    return g;
}

Json marking_to_json(const GridDomain& g) {
    Json a = Json::array(), b = Json::array();
    for (std::size_t j = 0; j < g.rows; ++j) {
        for (std::size_t i = 0; i < g.cols; ++i) {
            if (g.side[g.at(i, j)] == GridDomain::Side::A) a.push_back(Json::array({i, j}));
            if (g.side[g.at(i, j)] == GridDomain::Side::B) b.push_back(Json::array({i, j}));
        }
    }
    return Json{{"delta", g.delta}, {"side_a", a}, {"side_b", b}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace innerlab
