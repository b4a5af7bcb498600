import tensorflow as tf

acc = tf.TensorArray(tf.int32, size=3)
for i in range(3):
    acc = acc.write(i, i)
result = acc.stack()
