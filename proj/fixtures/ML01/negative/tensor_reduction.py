import torch
import torch.nn as nn

torch.manual_seed(0)
torch.use_deterministic_algorithms(True)

values = torch.ones(10)
total = values.sum()
for step in range(3):
    total += step
print(total)
