package fixtures.zeta;

import java.util.ArrayList;
import java.util.List;

public class Scheduling {

    enum Priority {
        LOW, NORMAL, HIGH;

        boolean outranks(Priority other) {
            return ordinal() > other.ordinal();
        }
    }

    interface Clock {
        long now();

        default boolean before(long instant) {
            return now() < instant;
        }
    }

    public static class Task {
        final long deadline;
        final Priority priority;

        Task(long deadline, Priority priority) {
            this.deadline = deadline;
            this.priority = priority;
        }
    }

    public Task urgent(long now, long slack) {
        return new Task(now + slack, slack < 100L ? Priority.HIGH : Priority.NORMAL);
    }

    public boolean due(Task task, Clock clock) {
        return clock.now() >= task.deadline;
    }

    public int countOverdue(List<Task> tasks, long now) {
        int overdue = 0;
        for (int i = 0; i < tasks.size(); i++) {
            if (tasks.get(i).deadline < now) {
                overdue++;
            }
        }
        return overdue;
    }

    public List<Task> dropExpired(List<Task> tasks, long cutoff) {
        List<Task> alive = new ArrayList<>();
        for (Task task : tasks) {
            if (task.deadline >= cutoff) {
                alive.add(task);
            }
        }
        return alive;
    }

    public long backoffMillis(int attempt) {
        long wait = 100L;
        int round = 0;
        while (round < attempt) {
            wait *= 2;
            round++;
        }
        return wait > 30000L ? 30000L : wait;
    }

    public int busyWait(int spins) {
        int i = 0;
        do {
            i++;
        } while (i < spins);
        return i;
    }

    public void checkQuantum(long quantum) {
        assert quantum > 0L : "quantum must be positive";
    }

    public boolean sameBucket(long a, long b, long bucket) {
        long slotA = a / bucket;
        long slotB = b / bucket;
        return slotA == slotB && bucket > 0;
    }

    public Runnable tracer(long threshold) {
        final boolean noisy = threshold < 10L;
        return new Runnable() {
            public void run() {
                if (noisy) {
                    report(1);
                }
            }
        };
    }

    private void report(int level) {
        if (level > 0) {
            checkQuantum(level);
        }
    }

    public int pick(int a, int b) {
        int winner = a >= b ? a : b;
        return winner;
    }

    public boolean shouldPreempt(Task current, Task candidate) {
        boolean ranked = candidate.priority.outranks(current.priority);
        boolean earlier = candidate.deadline < current.deadline;
        return ranked || earlier;
    }
}
