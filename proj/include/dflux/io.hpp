#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "dflux/scheme.hpp"

namespace dflux {

// Header t,x_left,x_right,rho; one row per cell and a t,xi,xi,NaN marker row.
void write_snapshot_csv(std::ostream& out, const std::vector<Snapshot>& snapshots);
void write_snapshot_csv_file(const std::string& path, const std::vector<Snapshot>& snapshots);
std::vector<Snapshot> read_snapshot_csv(std::istream& in);

nlohmann::json to_json(const MovingMesh& mesh);
MovingMesh mesh_from_json(const nlohmann::json& j);
nlohmann::json to_json(const StepRecord& rec);
StepRecord record_from_json(const nlohmann::json& j);

// One StepRecord per line.
class TranscriptWriter {
 public:
  explicit TranscriptWriter(std::ostream& out) : out_(out) {}
  void write(const StepRecord& rec);

 private:
  std::ostream& out_;
};

std::vector<StepRecord> read_transcript(std::istream& in);

}  // namespace dflux
