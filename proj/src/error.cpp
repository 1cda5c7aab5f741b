#include "karteszi/error.hpp"

namespace karteszi {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::ParallelLines: return "ParallelLines";
    case Errc::CenterMismatch: return "CenterMismatch";
    case Errc::DegenerateSimilarity: return "DegenerateSimilarity";
    case Errc::InvalidTolerance: return "InvalidTolerance";
    case Errc::ClassOutOfRange: return "ClassOutOfRange";
    case Errc::BadN: return "BadN";
    case Errc::BadClassRange: return "BadClassRange";
    case Errc::EqualClasses: return "EqualClasses";
    case Errc::ArcSumMismatch: return "ArcSumMismatch";
    case Errc::NonPositiveArc: return "NonPositiveArc";
    case Errc::MidpointCase: return "MidpointCase";
    case Errc::NotIncident: return "NotIncident";
    case Errc::RefuseAmbiguous: return "RefuseAmbiguous";
    case Errc::InvalidStyle: return "InvalidStyle";
    case Errc::IoError: return "IoError";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace karteszi
