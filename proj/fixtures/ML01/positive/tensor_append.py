import torch
import torch.nn as nn

torch.manual_seed(0)
torch.use_deterministic_algorithms(True)

scores = torch.zeros(4, 3)
picked = []
for i in range(4):  # expect: ML01
    picked.append(scores[i, 0])
print(picked)
