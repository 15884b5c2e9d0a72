#include "coxeter/system.hpp"

#include <algorithm>

namespace coxeter {

CoxeterSystem make_system(CoxeterGraph g, VertexOrder order) {
  FormMatrix form = form_matrix(g);
  Orientation ori = orientation_from_order(g, order);
  TraceWord k = complete_word(g, ori).word;
  GroupElement c = coxeter_element(form, order);
  GroupElement ci = element_of_word(form, transpose(k));
  return CoxeterSystem{std::move(g),   std::move(form), std::move(order),
                       std::move(ori), std::move(k),    std::move(c),
                       std::move(ci)};
}

CoxeterSystem make_system(CoxeterGraph g, const Orientation& orientation) {
  VertexOrder order = order_from_orientation(g, orientation);
  return make_system(std::move(g), std::move(order));
}

CoxeterSystem inverse_system(const CoxeterSystem& sys) {
  std::vector<Vertex> rev(sys.order.seq.rbegin(), sys.order.seq.rend());
  return make_system(sys.graph, VertexOrder{std::move(rev)});
}

}  // namespace coxeter
