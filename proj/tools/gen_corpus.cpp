// Regenerates the document corpus under data/. Every emitted file passes
// `gwo check`; run from the repository root after changing the schema.

#include <cstdio>
#include <filesystem>
#include <string>

#include "gwo/document.hpp"
#include "gwo/internal.hpp"
#include "gwo/xmod.hpp"

using namespace gwo;

namespace {

std::string out_dir = "data";

void emit(const std::string& file, StructureDocument doc) {
  if (!validate_document(doc).ok()) {
    std::fprintf(stderr, "refusing to write invalid document %s\n",
                 file.c_str());
    std::exit(1);
  }
  save_document(doc, out_dir + "/" + file);
  std::printf("wrote %s/%s\n", out_dir.c_str(), file.c_str());
}

StructureDocument doc_of(StructureDocument::Payload payload, std::string name,
                         std::string comment = "") {
  StructureDocument doc;
  doc.payload = std::move(payload);
  doc.name = std::move(name);
  doc.comment = std::move(comment);
  return doc;
}

CrossedModule zero_xmod(const OpAlgebra& a, const OpAlgebra& b) {
  // zero map with the trivial action; stars all zero
  CrossedModule x;
  x.a = a;
  x.b = b;
  x.alpha.assign(a.size, b.zero);
  x.action.actor = b;
  x.action.acted = a;
  x.action.dot.resize((size_t)b.size * a.size);
  for (int bb = 0; bb < b.size; ++bb)
    for (int aa = 0; aa < a.size; ++aa)
      x.action.dot[(size_t)bb * a.size + aa] = aa;
  for (const auto& [name, table] : b.binary_ops) {
    (void)table;
    x.action.stars[name] =
        std::vector<int>((size_t)b.size * a.size, a.zero);
  }
  return x;
}

CrossedModule conjugation_xmod(const OpAlgebra& g) {
  CrossedModule x;
  x.a = g;
  x.b = g;
  x.alpha.resize(g.size);
  for (int i = 0; i < g.size; ++i) x.alpha[i] = i;
  x.action.actor = g;
  x.action.acted = g;
  x.action.dot.resize((size_t)g.size * g.size);
  for (int bb = 0; bb < g.size; ++bb)
    for (int aa = 0; aa < g.size; ++aa)
      x.action.dot[(size_t)bb * g.size + aa] =
          g.plus(g.plus(bb, aa), g.minus(bb));
  for (const auto& [name, table] : g.binary_ops) {
    (void)table;
    std::vector<int> t((size_t)g.size * g.size);
    for (int bb = 0; bb < g.size; ++bb)
      for (int aa = 0; aa < g.size; ++aa)
        t[(size_t)bb * g.size + aa] = g.star(name, bb, aa);
    x.action.stars[name] = std::move(t);
  }
  return x;
}

CrossedModule inclusion_xmod_z2_z4() {
  CrossedModule x;
  x.a = cyclic_algebra(2);
  x.b = cyclic_algebra(4);
  x.alpha = {0, 2};
  x.action.actor = x.b;
  x.action.acted = x.a;
  x.action.dot = {0, 1, 0, 1, 0, 1, 0, 1};  // trivial: 4 rows over Z2
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) out_dir = argv[1];
  std::filesystem::create_directories(out_dir);

  // algebras
  emit("z2.json", doc_of(cyclic_algebra(2), "z2", "cyclic group of order 2"));
  emit("z3.json", doc_of(cyclic_algebra(3), "z3", "cyclic group of order 3"));
  emit("z4.json", doc_of(cyclic_algebra(4), "z4", "cyclic group of order 4"));
  emit("z6.json", doc_of(cyclic_algebra(6), "z6", "cyclic group of order 6"));
  emit("klein.json", doc_of(klein_four(), "klein", "Klein four-group"));
  emit("s3.json", doc_of(sym3(), "s3", "symmetric group on 3 letters"));
  emit("r4.json",
       doc_of(ring_zmod(4), "r4", "integers mod 4 with multiplication"));
  emit("r2.json",
       doc_of(ring_zmod(2), "r2", "integers mod 2 with multiplication"));
  emit("r4zero.json",
       doc_of(ring_zero(4), "r4zero", "4-element ring, zero multiplication"));
  emit("r2zero.json",
       doc_of(ring_zero(2), "r2zero", "2-element ring, zero multiplication"));

  // groupoids
  emit("z4-gpd.json", doc_of(one_object_groupoid(cyclic_algebra(4)), "z4-gpd",
                             "one-object groupoid on Z4"));
  emit("s3-gpd.json", doc_of(one_object_groupoid(sym3()), "s3-gpd",
                             "one-object groupoid on S3"));
  {
    CosetCover cover =
        coset_cover(one_object_groupoid(cyclic_algebra(4)), 0, {0, 2});
    emit("two-object-gpd.json",
         doc_of(cover.cover, "two-object-gpd",
                "transitive groupoid on 2 objects, vertex group Z2"));
  }

  // internal groupoids
  InternalGroupoid z4_internal = one_object_internal(cyclic_algebra(4));
  emit("z4-internal.json",
       doc_of(z4_internal, "z4-internal", "one-object internal groupoid"));
  emit("r4zero-internal.json",
       doc_of(one_object_internal(ring_zero(4)), "r4zero-internal",
              "one-object internal ring groupoid"));
  emit("z2-discrete-internal.json",
       doc_of(discrete_internal(cyclic_algebra(2)), "z2-discrete-internal",
              "discrete internal groupoid on Z2"));

  // crossed modules
  emit("xmod-z2-trivial.json",
       doc_of(zero_xmod(cyclic_algebra(2), cyclic_algebra(2)),
              "xmod-z2-trivial"));
  emit("xmod-z3-id.json", doc_of(conjugation_xmod(cyclic_algebra(3)),
                                 "xmod-z3-id", "identity with conjugation"));
  emit("xmod-s3-conj.json", doc_of(conjugation_xmod(sym3()), "xmod-s3-conj",
                                   "nonabelian conjugation crossed module"));
  emit("xmod-r2zero.json",
       doc_of(zero_xmod(ring_zero(2), ring_zero(2)), "xmod-r2zero",
              "ring-signature crossed module"));
  emit("xmod-z2-z4.json",
       doc_of(inclusion_xmod_z2_z4(), "xmod-z2-z4", "doubling inclusion"));
  {
    InternalGroupoid from_xmod =
        xmod_to_internal(zero_xmod(cyclic_algebra(2), cyclic_algebra(2)));
    emit("xmod-z2-internal.json",
         doc_of(from_xmod, "xmod-z2-internal",
                "internal groupoid of the trivial Z2 crossed module"));
  }

  // covers and actions over z4-internal
  {
    auto [source, projection] = lift_internal_structure(z4_internal, {0, 2});
    (void)source;
    StructureDocument doc =
        doc_of(projection, "cover-z4-02", "2-coset cover of z4-internal");
    doc.base = 0;
    emit("cover-z4-02.json", std::move(doc));

    InternalAction action = covering_to_action(projection);
    emit("action-z4-02.json",
         doc_of(action, "action-z4-02", "coset action of z4-internal"));
  }
  {
    auto [source, projection] = lift_internal_structure(z4_internal, {0});
    (void)source;
    StructureDocument doc =
        doc_of(projection, "cover-z4-universal", "universal cover");
    doc.base = 0;
    emit("cover-z4-universal.json", std::move(doc));
  }
  emit("action-z4-self.json",
       doc_of(canonical_self_action(z4_internal), "action-z4-self",
              "canonical action on the object algebra"));

  // a surjective internal morphism that is not a covering
  {
    InternalGroupoid z2 = one_object_internal(cyclic_algebra(2));
    InternalGroupoid point = one_object_internal(cyclic_algebra(1));
    InternalMorphism collapse;
    collapse.source = z2;
    collapse.target = point;
    collapse.arrow_map = {0, 0};
    collapse.object_map = {0};
    emit("noncover-z2-collapse.json",
         doc_of(collapse, "noncover-z2-collapse",
                "surjective morphism with non-bijective stars"));
  }
  return 0;
}
