import torch
import torch.nn as nn

torch.manual_seed(0)
torch.use_deterministic_algorithms(True)

probs = torch.softmax(torch.ones(3), dim=0)
log_probs = torch.log(probs)  # expect: ML15
