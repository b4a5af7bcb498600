import torch
import torch.nn as nn

torch.manual_seed(0)
torch.use_deterministic_algorithms(True)

values = torch.ones(10)
total = 0
for i in range(10):  # expect: ML01
    total += values[i]
print(total)
