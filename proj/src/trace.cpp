#include "berge/trace.hpp"

namespace berge {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::string_view record_kind(const TraceRecord& r) {
  return std::visit(
      Overloaded{
          [](const BaseCaseR2&) -> std::string_view { return "BaseCaseR2"; },
          [](const CutVertex&) -> std::string_view { return "CutVertex"; },
          [](const VertexDeletion&) -> std::string_view { return "VertexDeletion"; },
          [](const Shrink&) -> std::string_view { return "Shrink"; },
          [](const AllSubsetsCycle&) -> std::string_view { return "AllSubsetsCycle"; },
          [](const DisconnectingEdgeDeleted&) -> std::string_view {
            return "DisconnectingEdgeDeleted";
          },
          [](const Lemma1& l) -> std::string_view {
            switch (l.which) {
              case 1: return "Lemma1.1";
              case 2: return "Lemma1.2";
              default: return "Lemma1.3";
            }
          },
          [](const RemoteCycleExtension&) -> std::string_view { return "RemoteCycleExtension"; },
          [](const Recurse&) -> std::string_view { return "Recurse"; },
          [](const PromoteViaSpan&) -> std::string_view { return "PromoteViaSpan"; },
          [](const PromoteViaOutsideEdge&) -> std::string_view { return "PromoteViaOutsideEdge"; },
      },
      r);
}

}  // namespace berge
