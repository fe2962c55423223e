#include "qbohr/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace qbohr::io {

namespace {

json complex_to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("expected a complex number as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw InputError(std::string("missing field '") + name + "'");
  return j.at(name);
}

json vector_to_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(complex_to_json(v(i)));
  return out;
}

Vec vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of complex numbers");
  Vec v(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

}  // namespace

json algebra_to_json(const MultiMatrixAlgebra& A) {
  return json{{"blocks", A.blocks()}};
}

AlgebraPtr algebra_from_json(const json& j) {
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw InputError("'blocks' must be an array");
  std::vector<int> sizes;
  for (const auto& b : blocks) {
    if (!b.is_number_integer()) throw InputError("block sizes must be integers");
    sizes.push_back(b.get<int>());
  }
  return make_algebra(std::move(sizes));
}

json element_to_json(const AlgebraElement& a) {
  return json{{"coords", vector_to_json(a.coords)}};
}

AlgebraElement element_from_json(const json& j, const AlgebraPtr& A) {
  Vec coords = vector_from_json(field(j, "coords"));
  if (coords.size() != A->dim())
    throw InputError("element coordinate count does not match the algebra");
  return element(A, std::move(coords));
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a matrix as an array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = -1;
  Mat m;
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array()) throw InputError("matrix rows must be arrays");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(j[r].size());
      m.resize(rows, cols);
    }
    if (static_cast<Eigen::Index>(j[r].size()) != cols)
      throw InputError("matrix rows have inconsistent lengths");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[r][c]);
  }
  if (rows == 0) m.resize(0, 0);
  return m;
}

json map_to_json(const LinearMap& f) {
  return json{{"matrix", matrix_to_json(f.matrix)},
              {"source", algebra_to_json(*f.source)},
              {"target", algebra_to_json(*f.target)}};
}

LinearMap map_from_json(const json& j) {
  AlgebraPtr source = algebra_from_json(field(j, "source"));
  AlgebraPtr target = algebra_from_json(field(j, "target"));
  Mat m = matrix_from_json(field(j, "matrix"));
  if (m.rows() != target->dim() || m.cols() != source->dim())
    throw InputError("map matrix shape does not match source/target");
  return make_map(std::move(source), std::move(target), std::move(m));
}

json qsg_to_json(const QuantumSemigroup& G) {
  return json{{"algebra", algebra_to_json(*G.algebra())},
              {"delta", matrix_to_json(G.delta().matrix)}};
}

QsgPtr qsg_from_json(const json& j, double tol) {
  AlgebraPtr A = algebra_from_json(field(j, "algebra"));
  Mat delta = matrix_from_json(field(j, "delta"));
  const TensorIndexer idx(A, A);
  if (delta.rows() != idx.tensor()->dim() || delta.cols() != A->dim())
    throw InputError("delta matrix shape does not match the algebra");
  return make_qsg(A, make_map(A, idx.tensor(), std::move(delta)), tol);
}

json functional_to_json(const StateFunctional& phi) {
  return json{{"covector", vector_to_json(phi.covector.transpose())},
              {"flags",
               {{"normalized", phi.normalized},
                {"positive", phi.positive},
                {"tracial", phi.tracial}}}};
}

StateFunctional functional_from_json(const json& j, const AlgebraPtr& A) {
  Vec cov = vector_from_json(field(j, "covector"));
  if (cov.size() != A->dim())
    throw InputError("covector length does not match the algebra");
  // Flags are derived data; recompute them instead of trusting the file.
  return make_functional(A, cov.transpose());
}

json rep_to_json(const RepMatrix& T) {
  json rows = json::array();
  for (int k = 0; k < T.size; ++k) {
    json row = json::array();
    for (int l = 0; l < T.size; ++l)
      row.push_back(element_to_json(T.entry(k, l)));
    rows.push_back(std::move(row));
  }
  return json{{"entries", std::move(rows)},
              {"parent", algebra_to_json(*T.parent)},
              {"size", T.size}};
}

RepMatrix rep_from_json(const json& j, const AlgebraPtr& A) {
  AlgebraPtr parent = A ? A : algebra_from_json(field(j, "parent"));
  if (j.contains("parent")) {
    AlgebraPtr embedded = algebra_from_json(j.at("parent"));
    if (!same_algebra(*embedded, *parent))
      throw InputError("representation parent does not match the algebra");
  }
  const json& size_j = field(j, "size");
  if (!size_j.is_number_integer())
    throw InputError("'size' must be an integer");
  const int n = size_j.get<int>();
  const json& entries = field(j, "entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != n)
    throw InputError("'entries' must be an n x n array of elements");
  RepMatrix T = make_rep(parent, n);
  for (int k = 0; k < n; ++k) {
    if (!entries[k].is_array() || static_cast<int>(entries[k].size()) != n)
      throw InputError("'entries' must be an n x n array of elements");
    for (int l = 0; l < n; ++l)
      T.set_entry(k, l, element_from_json(entries[k][l], parent));
  }
  return T;
}

json family_to_json(const StateFamily& F) {
  json members = json::array();
  for (const StateFunctional& phi : F.members)
    members.push_back(functional_to_json(phi));
  return json{{"algebra", algebra_to_json(*F.parent)},
              {"members", std::move(members)}};
}

StateFamily family_from_json(const json& j, const AlgebraPtr& A) {
  if (j.contains("algebra")) {
    AlgebraPtr embedded = algebra_from_json(j.at("algebra"));
    if (!same_algebra(*embedded, *A))
      throw InputError("family algebra does not match");
  }
  const json& members = field(j, "members");
  if (!members.is_array()) throw InputError("'members' must be an array");
  std::vector<StateFunctional> list;
  for (const auto& m : members) list.push_back(functional_from_json(m, A));
  return tracial_state_family(A, std::move(list));
}

json sub_to_json(const SubQuantumGroup& B, const HopfStructure* hopf) {
  json generators = json::array();
  for (const RepMatrix& g : B.generators) generators.push_back(rep_to_json(g));
  json out{{"ambient", qsg_to_json(*B.ambient)},
           {"carrier", matrix_to_json(B.carrier.basis)},
           {"chi", matrix_to_json(B.chi.matrix)},
           {"generators", std::move(generators)},
           {"presented", qsg_to_json(*B.presented)}};
  if (hopf)
    out["hopf"] = json{{"antipode", matrix_to_json(hopf->antipode.matrix)},
                       {"counit", functional_to_json(hopf->counit)}};
  return out;
}

SubQuantumGroup sub_from_json(const json& j, double tol) {
  QsgPtr ambient = qsg_from_json(field(j, "ambient"), tol);
  QsgPtr presented = qsg_from_json(field(j, "presented"), tol);
  Mat carrier = matrix_from_json(field(j, "carrier"));
  if (carrier.cols() > 0 && carrier.rows() != ambient->algebra()->dim())
    throw InputError("carrier basis has wrong row count");
  if (carrier.cols() == 0) carrier.resize(ambient->algebra()->dim(), 0);
  Mat chi = matrix_from_json(field(j, "chi"));
  if (chi.rows() != ambient->algebra()->dim() ||
      chi.cols() != presented->algebra()->dim())
    throw InputError("chi matrix has wrong shape");
  SubQuantumGroup B{ambient,
                    Subspace{ambient->algebra(), std::move(carrier)},
                    presented,
                    make_map(presented->algebra(), ambient->algebra(),
                             std::move(chi)),
                    {}};
  if (j.contains("generators"))
    for (const auto& g : j.at("generators"))
      B.generators.push_back(rep_from_json(g, presented->algebra()));
  return B;
}

json quotient_to_json(const QuotientResult& Q) {
  json out{{"source", qsg_to_json(*Q.source)},
           {"ideal", matrix_to_json(Q.ideal.basis)},
           {"descends", verdict_to_json(Q.descends)},
           {"cqg", verdict_to_json(Q.cqg)},
           {"kac", verdict_to_json(Q.kac)}};
  if (Q.quotient_algebra) {
    out["quotient_algebra"] = algebra_to_json(*Q.quotient_algebra);
    out["projection"] = matrix_to_json(Q.projection.matrix);
  }
  if (Q.quotient) out["quotient"] = qsg_to_json(*Q.quotient);
  return out;
}

json verdict_to_json(const Verdict& v) {
  return json{{"defect", v.defect}, {"pass", v.pass}, {"witness", v.witness}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) +
                     ": " + e.what());
  }
}

json parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace qbohr::io
