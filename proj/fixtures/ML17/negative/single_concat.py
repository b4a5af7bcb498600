import tensorflow as tf

acc = tf.constant([0])
extra = tf.constant([1])
joined = tf.concat([acc, extra], 0)
for i in range(3):
    print(i)
