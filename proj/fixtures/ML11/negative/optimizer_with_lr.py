import torch
import torch.nn as nn

torch.manual_seed(0)
torch.use_deterministic_algorithms(True)

net = nn.Linear(2, 1)
opt = torch.optim.Adam(net.parameters(), lr=0.001)
sgd = torch.optim.SGD(net.parameters(), 0.1)
