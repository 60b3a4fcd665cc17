// Writes the evaluation scenes as JSON documents into the given directory.
#include <filesystem>
#include <iostream>

#include "mrr/fixtures.h"
#include "mrr/scene_io.h"

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "scenes";
  std::filesystem::create_directories(dir);
  for (const auto& [name, scene] : mrr::fixtures::EvaluationScenes()) {
    const auto path = dir / (name + ".json");
    mrr::SaveScene(path, scene);
    std::cout << path.string() << ": " << scene.triangles.size() << " triangles\n";
  }
  return 0;
}
